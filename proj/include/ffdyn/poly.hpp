/*
   Copyright 2026 The ffdyn Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Dense univariate polynomials over a FieldSpec. Coefficients are stored
// constant term first; the zero polynomial is the empty vector.
//
// Every root condition in the library is evaluated as a congruence
// t^e == 1 (mod f) in F_q[t]/(f). No extension field is ever built for it.

#ifndef FFDYN_POLY_HPP
#define FFDYN_POLY_HPP

#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "exact.hpp"
#include "ff.hpp"

namespace ffdyn {

using Coeffs = std::vector<Elem>;

namespace detail {

inline Coeffs poly_add(const FieldSpec& F, const Coeffs& a, const Coeffs& b) {
    Coeffs r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
}

inline Coeffs poly_sub(const FieldSpec& F, const Coeffs& a, const Coeffs& b) {
    Coeffs r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
}

inline Coeffs poly_mul(const FieldSpec& F, const Coeffs& a, const Coeffs& b) {
    if (a.empty() || b.empty()) return {};
    Coeffs r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    trim(r);
    return r;
}

/// (quotient, remainder); b must be nonzero.
inline std::pair<Coeffs, Coeffs> poly_divmod(const FieldSpec& F, Coeffs a, const Coeffs& b) {
    if (b.empty()) throw InvalidArgument("polynomial division by zero");
    trim(a);
    const std::size_t m = b.size() - 1;
    if (a.size() < b.size()) return {Coeffs{}, a};
    const Elem lead_inv = F.inv(b.back());
    Coeffs quot(a.size() - m, 0);
    for (std::size_t k = a.size(); k-- > m;) {
        const Elem c = F.mul(a[k], lead_inv);
        quot[k - m] = c;
        if (c == 0) continue;
        for (std::size_t i = 0; i <= m; ++i) a[k - m + i] = F.sub(a[k - m + i], F.mul(c, b[i]));
    }
    a.resize(m);
    trim(a);
    trim(quot);
    return {quot, a};
}

inline Coeffs make_monic(const FieldSpec& F, Coeffs a) {
    trim(a);
    if (a.empty() || a.back() == F.one()) return a;
    const Elem inv = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, inv);
    return a;
}

/// Monic gcd; gcd(0, 0) = 0.
inline Coeffs poly_gcd(const FieldSpec& F, Coeffs a, Coeffs b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = poly_divmod(F, std::move(a), b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(F, std::move(a));
}

/// Arithmetic in F_q[t]/(f) for a monic f of degree n >= 1. Residues are
/// length-n coefficient vectors. Holds scratch space, so one instance per thread.
class ModRing {
   public:
    ModRing(const FieldSpec& F, std::span<const Elem> f) : F_(F) {
        lazy_ = F_.degree() == 1 && F_.characteristic() < (1U << 20);
        lazy_ext_ = F_.degree() > 1 && F_.characteristic() < (1U << 16);
        if (lazy_ext_) {
            const auto m = F_.modulus();
            neg_m_.resize(F_.degree());
            for (unsigned j = 0; j < F_.degree(); ++j) neg_m_[j] = (F_.characteristic() - m[j]) % F_.characteristic();
            digit_bits_ = std::max(1, static_cast<int>(std::bit_width(static_cast<std::uint64_t>(F_.characteristic() - 1))));
        }
        set_modulus(f);
    }

    /// Switch to another modulus, reusing buffers.
    void set_modulus(std::span<const Elem> f) {
        if (f.size() < 2 || f.back() != F_.one()) throw InvalidArgument("ModRing needs a monic modulus of degree >= 1");
        f_.assign(f.begin(), f.end());
        n_ = f_.size() - 1;
        neg_f_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) neg_f_[i] = F_.neg(f_[i]);
        scratch_.resize(2 * n_);
        if (lazy_ext_) {
            const unsigned d = F_.degree();
            neg_f_dig_.assign(n_ * d, 0);
            for (std::size_t i = 0; i < n_; ++i)
                for (unsigned j = 0; j < d; ++j) neg_f_dig_[i * d + j] = F_.digit(neg_f_[i], j);
            acc_.assign(2 * n_ * (2 * d - 1), 0);
            a_dig_.assign(n_ * d, 0);
            b_dig_.assign(n_ * d, 0);
        }
    }

    std::size_t degree() const { return n_; }

    Coeffs one() const {
        Coeffs r(n_, 0);
        r[0] = F_.one();
        return r;
    }

    /// t mod f.
    Coeffs t() const {
        Coeffs r(n_, 0);
        if (n_ == 1)
            r[0] = neg_f_[0];
        else
            r[1] = F_.one();
        return r;
    }

    Coeffs reduce(const Coeffs& a) {
        if (a.size() <= n_) {
            Coeffs r(n_, 0);
            std::copy(a.begin(), a.end(), r.begin());
            return r;
        }
        auto rem = poly_divmod(F_, a, f_).second;
        rem.resize(n_, 0);
        return rem;
    }

    void mul(const Elem* a, const Elem* b, Elem* out) {
        if (lazy_) {
            mul_lazy(a, b, out);
            return;
        }
        if (lazy_ext_) {
            mul_lazy_ext(a, b, out);
            return;
        }
        auto& prod = scratch_;
        std::fill(prod.begin(), prod.end(), 0);
        for (std::size_t i = 0; i < n_; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < n_; ++j) prod[i + j] = F_.add(prod[i + j], F_.mul(a[i], b[j]));
        }
        for (std::size_t k = 2 * n_ - 1; k-- > n_;) {
            const Elem c = prod[k];
            if (c == 0) continue;
            for (std::size_t i = 0; i < n_; ++i) prod[k - n_ + i] = F_.add(prod[k - n_ + i], F_.mul(c, neg_f_[i]));
        }
        std::copy(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(n_), out);
    }

    /// a <- a * t.
    void mul_t(Elem* a) const {
        const Elem top = a[n_ - 1];
        for (std::size_t i = n_ - 1; i > 0; --i) a[i] = a[i - 1];
        a[0] = 0;
        if (top == 0) return;
        for (std::size_t i = 0; i < n_; ++i) a[i] = F_.add(a[i], F_.mul(top, neg_f_[i]));
    }

    Coeffs mul(const Coeffs& a, const Coeffs& b) {
        Coeffs r(n_);
        mul(a.data(), b.data(), r.data());
        return r;
    }

    /// t^e mod f, binary powering where the multiply step is a shift.
    Coeffs pow_t(const ExactInt& e) {
        if (e < 0) throw InvalidArgument("negative exponent");
        Coeffs r = one();
        Coeffs tmp(n_);
        const auto bits = e == 0 ? 0U : static_cast<unsigned>(boost::multiprecision::msb(e)) + 1;
        for (unsigned i = bits; i-- > 0;) {
            mul(r.data(), r.data(), tmp.data());
            r.swap(tmp);
            if (boost::multiprecision::bit_test(e, i)) mul_t(r.data());
        }
        return r;
    }

    Coeffs pow_t(std::uint64_t e) {
        Coeffs r = one();
        Coeffs tmp(n_);
        for (unsigned i = static_cast<unsigned>(std::bit_width(e)); i-- > 0;) {
            mul(r.data(), r.data(), tmp.data());
            r.swap(tmp);
            if ((e >> i) & 1U) mul_t(r.data());
        }
        return r;
    }

    Coeffs pow(Coeffs base, std::uint64_t e) {
        Coeffs r = one();
        Coeffs tmp(n_);
        while (e) {
            if (e & 1U) {
                mul(r.data(), base.data(), tmp.data());
                r.swap(tmp);
            }
            e >>= 1U;
            if (e) {
                mul(base.data(), base.data(), tmp.data());
                base.swap(tmp);
            }
        }
        return r;
    }

    bool is_one(const Coeffs& a) const {
        if (a[0] != F_.one()) return false;
        for (std::size_t i = 1; i < n_; ++i)
            if (a[i] != 0) return false;
        return true;
    }

   private:
    void mul_lazy(const Elem* a, const Elem* b, Elem* out) {
        const std::uint64_t p = F_.characteristic();
        auto& prod = scratch_;
        std::fill(prod.begin(), prod.end(), 0);
        for (std::size_t i = 0; i < n_; ++i) {
            const std::uint64_t ai = a[i];
            if (ai == 0) continue;
            for (std::size_t j = 0; j < n_; ++j) prod[i + j] += ai * b[j];
        }
        for (std::size_t k = 2 * n_ - 1; k-- > n_;) {
            const std::uint64_t c = prod[k] % p;
            if (c == 0) continue;
            for (std::size_t i = 0; i < n_; ++i) prod[k - n_ + i] += c * neg_f_[i];
        }
        for (std::size_t i = 0; i < n_; ++i) out[i] = prod[i] % p;
    }

    // Extension fields: coefficients unpacked to residue digits, products
    // accumulated unreduced, reduced mod the field modulus and mod p once per
    // output coefficient.
    void mul_lazy_ext(const Elem* a, const Elem* b, Elem* out) {
        const unsigned d = F_.degree();
        const std::size_t w = 2 * d - 1;
        for (std::size_t i = 0; i < n_; ++i)
            for (unsigned j = 0; j < d; ++j) {
                a_dig_[i * d + j] = F_.digit(a[i], j);
                b_dig_[i * d + j] = F_.digit(b[i], j);
            }
        std::fill(acc_.begin(), acc_.end(), 0);
        for (std::size_t i = 0; i < n_; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t k = 0; k < n_; ++k) {
                if (b[k] == 0) continue;
                std::uint64_t* dst = &acc_[(i + k) * w];
                for (unsigned j = 0; j < d; ++j) {
                    const std::uint64_t x = a_dig_[i * d + j];
                    if (x == 0) continue;
                    for (unsigned l = 0; l < d; ++l) dst[j + l] += x * b_dig_[k * d + l];
                }
            }
        }
        std::uint64_t c[FieldSpec::kMaxDegree];
        for (std::size_t k = 2 * n_ - 1; k-- > 0;) {
            reduce_digits(&acc_[k * w], c);
            if (k < n_) {
                Elem e = 0;
                for (unsigned j = 0; j < d; ++j) e |= Elem{c[j]} << (j * digit_bits_);
                out[k] = e;
                continue;
            }
            bool zero = true;
            for (unsigned j = 0; j < d; ++j) zero = zero && c[j] == 0;
            if (zero) continue;
            for (std::size_t i = 0; i < n_; ++i) {
                std::uint64_t* dst = &acc_[(k - n_ + i) * w];
                for (unsigned j = 0; j < d; ++j) {
                    if (c[j] == 0) continue;
                    for (unsigned l = 0; l < d; ++l) dst[j + l] += c[j] * neg_f_dig_[i * d + l];
                }
            }
        }
    }

    // Reduce a digit polynomial of length 2d-1 modulo the field modulus and p.
    void reduce_digits(std::uint64_t* v, std::uint64_t* c) const {
        const unsigned d = F_.degree();
        const std::uint64_t p = F_.characteristic();
        for (unsigned j = 2 * d - 1; j-- > d;) {
            const std::uint64_t top = v[j] % p;
            v[j] = 0;
            if (top == 0) continue;
            for (unsigned l = 0; l < d; ++l) v[j - d + l] += top * neg_m_[l];
        }
        for (unsigned j = 0; j < d; ++j) {
            c[j] = v[j] % p;
            v[j] = 0;
        }
    }

    const FieldSpec& F_;
    bool lazy_ext_ = false;
    unsigned digit_bits_ = 1;
    std::vector<std::uint64_t> neg_m_;
    std::vector<std::uint64_t> neg_f_dig_;
    std::vector<std::uint64_t> acc_;
    std::vector<std::uint64_t> a_dig_;
    std::vector<std::uint64_t> b_dig_;
    Coeffs f_;
    Coeffs neg_f_;
    std::size_t n_ = 0;
    bool lazy_ = false;
    std::vector<std::uint64_t> scratch_;
};

/// Rabin's test: t^{q^n} = t mod f and gcd(t^{q^{n/r}} - t, f) = 1 for primes r | n.
inline bool is_irreducible_raw(const FieldSpec& F, std::span<const Elem> f) {
    const std::size_t n = f.size() - 1;
    if (n == 1) return true;
    if (f[0] == 0) return false;
    ModRing R(F, f);
    const Coeffs fc(f.begin(), f.end());
    if (n <= 3) {
        // Irreducible iff no root in F_q.
        Coeffs y = R.pow(R.t(), F.order());
        if (y.size() < 2) y.resize(2, 0);
        y[1] = F.sub(y[1], F.one());
        trim(y);
        return poly_gcd(F, y, fc).size() == 1;
    }
    std::vector<Coeffs> frob(n + 1);
    frob[0] = R.t();
    for (std::size_t k = 1; k <= n; ++k) frob[k] = R.pow(frob[k - 1], F.order());
    if (frob[n] != R.t()) return false;
    for (auto [r, k] : factorize(n)) {
        Coeffs y = frob[n / r];
        if (y.size() < 2) y.resize(2, 0);
        y[1] = F.sub(y[1], F.one());
        trim(y);
        if (poly_gcd(F, y, fc).size() > 1) return false;
    }
    return true;
}

/// Whether t^e = 1 mod f. f monic, degree >= 1; no irreducibility check.
inline bool power_congruence_holds(const FieldSpec& F, std::span<const Elem> f, const ExactInt& e) {
    ModRing R(F, f);
    return R.is_one(R.pow_t(e));
}

inline bool is_self_reciprocal_raw(const FieldSpec& F, std::span<const Elem> f) {
    const std::size_t n = f.size() - 1;
    if (f[0] == 0) return false;
    const Elem c = F.inv(f[0]);
    for (std::size_t i = 0; i <= n; ++i)
        if (F.mul(c, f[i]) != f[n - i]) return false;
    return true;
}

/// Fixed by f -> (f(0)^q)^{-1} t^n sum a_i^q t^{-i}. Rejects on the constant
/// term first (needs f(0)^{q+1} = 1).
inline bool is_self_conjugate_raw(const FieldSpec& F, std::span<const Elem> f) {
    const std::size_t n = f.size() - 1;
    if (f[0] == 0) return false;
    const Elem c = F.inv(F.conj(f[0]));
    if (c != f[0]) return false;
    for (std::size_t i = 1; i < n; ++i)
        if (F.mul(c, F.conj(f[i])) != f[n - i]) return false;
    return true;
}

}  // namespace detail

/// A polynomial over a field, constant term first, no trailing zeros.
class Poly {
   public:
    Poly(FieldPtr owner, Coeffs coeffs) : owner_(std::move(owner)), coeffs_(std::move(coeffs)) { detail::trim(coeffs_); }

    static Poly from_ints(const FieldPtr& f, std::initializer_list<std::int64_t> c) {
        Coeffs co;
        for (auto v : c) co.push_back(f->from_int(v));
        return {f, std::move(co)};
    }
    /// t^k.
    static Poly monomial(const FieldPtr& f, std::size_t k) {
        Coeffs co(k + 1, 0);
        co[k] = f->one();
        return {f, std::move(co)};
    }

    const FieldPtr& owner() const { return owner_; }
    const Coeffs& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == owner_->one(); }
    Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    Elem leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

    Elem eval(Elem x) const {
        Elem r = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) r = owner_->add(owner_->mul(r, x), coeffs_[i]);
        return r;
    }

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string s;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const Elem c = coeffs_[i];
            if (c == 0) continue;
            if (!s.empty()) s += " + ";
            std::string cs = owner_->to_string(c);
            if (owner_->degree() > 1 && cs.find('t') != std::string::npos) cs = "(" + cs + ")";
            if (i == 0 || c != owner_->one()) s += cs;
            if (i >= 1) s += "x";
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_ && *a.owner_ == *b.owner_; }
    friend Poly operator+(const Poly& a, const Poly& b) { return {a.owner_, detail::poly_add(*a.owner_, a.coeffs_, b.coeffs_)}; }
    friend Poly operator-(const Poly& a, const Poly& b) { return {a.owner_, detail::poly_sub(*a.owner_, a.coeffs_, b.coeffs_)}; }
    friend Poly operator*(const Poly& a, const Poly& b) { return {a.owner_, detail::poly_mul(*a.owner_, a.coeffs_, b.coeffs_)}; }
    friend Poly operator/(const Poly& a, const Poly& b) { return {a.owner_, detail::poly_divmod(*a.owner_, a.coeffs_, b.coeffs_).first}; }
    friend Poly operator%(const Poly& a, const Poly& b) { return {a.owner_, detail::poly_divmod(*a.owner_, a.coeffs_, b.coeffs_).second}; }

   private:
    FieldPtr owner_;
    Coeffs coeffs_;
};

inline Poly gcd(const Poly& a, const Poly& b) { return {a.owner(), detail::poly_gcd(*a.owner(), a.coeffs(), b.coeffs())}; }

/// Irreducibility over the owner field. f must be monic of degree >= 1.
inline bool is_irreducible(const Poly& f) {
    if (!f.is_monic() || f.degree() < 1) throw InvalidArgument("is_irreducible: expects a monic polynomial of degree >= 1");
    return detail::is_irreducible_raw(*f.owner(), f.coeffs());
}

inline constexpr std::uint64_t kDefaultPolyGuard = std::uint64_t{1} << 24;

namespace detail {

inline std::uint64_t checked_power(std::uint64_t q, unsigned n, std::uint64_t guard) {
    std::uint64_t total = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (total > guard / q) throw GuardExceeded("q^n = " + std::to_string(q) + "^" + std::to_string(n) + " exceeds the enumeration guard");
        total *= q;
    }
    return total;
}

/// Monic polynomials of degree n are numbered by sum index(a_i) q^i, i < n.
/// This decodes such a number into coefficients.
inline void decode_monic(const FieldSpec& F, std::uint64_t idx, unsigned n, Coeffs& co) {
    co.assign(n + 1, 0);
    const std::uint64_t q = F.order();
    for (unsigned i = 0; i < n; ++i) {
        co[i] = F.from_index(idx % q);
        idx /= q;
    }
    co[n] = F.one();
}

/// Odometer step over the lower n coefficients of a monic polynomial.
inline void advance_monic(const FieldSpec& F, std::vector<std::uint64_t>& dig, Coeffs& co) {
    const std::uint64_t q = F.order();
    for (std::size_t i = 0; i < dig.size(); ++i) {
        if (++dig[i] < q) {
            co[i] = F.from_index(dig[i]);
            return;
        }
        dig[i] = 0;
        co[i] = 0;
    }
}

inline void for_each_monic_irreducible_impl(const FieldSpec& F, unsigned n, const std::function<void(std::span<const Elem>)>& fn,
                                            std::uint64_t guard);

/// Bit i set iff monic polynomial number i of degree n is reducible. Sieve:
/// every product of a lower-degree irreducible with a monic cofactor is marked.
inline std::vector<bool> reducible_bitmap(const FieldSpec& F, unsigned n, std::uint64_t guard) {
    const std::uint64_t q = F.order();
    const std::uint64_t total = checked_power(q, n, guard);
    std::vector<bool> reducible(total, false);
    if (n == 1) return reducible;
    std::vector<std::uint64_t> qpow(n + 1, 1);
    for (unsigned i = 1; i <= n; ++i) qpow[i] = qpow[i - 1] * q;
    for (unsigned k = 1; k <= n / 2; ++k) {
        std::vector<Coeffs> lower;
        for_each_monic_irreducible_impl(F, k, [&](std::span<const Elem> g) { lower.emplace_back(g.begin(), g.end()); }, guard);
        const unsigned m = n - k;
        std::vector<std::uint64_t> hdig(m, 0);
        Coeffs h;
        Coeffs prod(n + 1);
        for (const auto& g : lower) {
            std::fill(hdig.begin(), hdig.end(), 0);
            decode_monic(F, 0, m, h);
            for (std::uint64_t hi = 0; hi < qpow[m]; ++hi) {
                std::fill(prod.begin(), prod.end(), 0);
                for (unsigned i = 0; i <= k; ++i) {
                    if (g[i] == 0) continue;
                    for (unsigned j = 0; j <= m; ++j) prod[i + j] = F.add(prod[i + j], F.mul(g[i], h[j]));
                }
                std::uint64_t idx = 0;
                for (unsigned i = n; i-- > 0;) idx = idx * q + F.index(prod[i]);
                reducible[idx] = true;
                advance_monic(F, hdig, h);
            }
        }
    }
    return reducible;
}

inline void for_each_monic_irreducible_impl(const FieldSpec& F, unsigned n, const std::function<void(std::span<const Elem>)>& fn,
                                            std::uint64_t guard) {
    if (n < 1) throw InvalidArgument("degree must be at least 1");
    const auto reducible = reducible_bitmap(F, n, guard);
    std::vector<std::uint64_t> dig(n, 0);
    Coeffs co;
    decode_monic(F, 0, n, co);
    for (std::uint64_t idx = 0; idx < reducible.size(); ++idx) {
        if (!reducible[idx]) fn(std::span<const Elem>(co));
        advance_monic(F, dig, co);
    }
}

}  // namespace detail

/// Calls fn(span of n+1 coefficients) for every monic irreducible of degree n
/// in lexicographic order (coefficient of t^{n-1} most significant).
template <class Fn>
void for_each_monic_irreducible(const FieldSpec& F, unsigned n, Fn&& fn, std::uint64_t guard = kDefaultPolyGuard) {
    detail::for_each_monic_irreducible_impl(F, n, std::function<void(std::span<const Elem>)>(std::forward<Fn>(fn)), guard);
}

inline std::vector<Poly> enumerate_monic_irreducibles(const FieldPtr& field, unsigned n, std::uint64_t guard = kDefaultPolyGuard) {
    std::vector<Poly> out;
    for_each_monic_irreducible(*field, n, [&](std::span<const Elem> f) { out.emplace_back(field, Coeffs(f.begin(), f.end())); }, guard);
    return out;
}

/// f(0)^{-1} t^{deg f} f(1/t); requires f(0) != 0.
inline Poly reciprocal_transform(const Poly& f) {
    const auto& F = *f.owner();
    if (f.is_zero() || f.coeff(0) == 0) throw InvalidArgument("reciprocal_transform: f(0) must be nonzero");
    const Elem c = F.inv(f.coeff(0));
    Coeffs r(f.coeffs().rbegin(), f.coeffs().rend());
    for (auto& x : r) x = F.mul(x, c);
    return {f.owner(), std::move(r)};
}

/// (f(0)^q)^{-1} t^{deg f} sum a_i^q t^{-i} over F_{q^2}.
inline Poly conjugate_transform(const Poly& f) {
    const auto& F = *f.owner();
    if (!F.has_base_subfield()) throw InvalidArgument("conjugate_transform: field has no declared base subfield");
    if (f.is_zero() || f.coeff(0) == 0) throw InvalidArgument("conjugate_transform: f(0) must be nonzero");
    const Elem c = F.inv(F.conj(f.coeff(0)));
    Coeffs r(f.coeffs().rbegin(), f.coeffs().rend());
    for (auto& x : r) x = F.mul(c, F.conj(x));
    return {f.owner(), std::move(r)};
}

/// Whether every root of the monic irreducible f satisfies alpha^e = 1,
/// decided as t^e = 1 mod f.
inline bool roots_satisfy_power(const Poly& f, const ExactInt& e) {
    if (!f.is_monic() || f.degree() < 1) throw InvalidArgument("roots_satisfy_power: expects a monic polynomial");
    if (f.degree() == 1 && f.coeff(0) == 0) throw InvalidArgument("roots_satisfy_power: f = t has the root 0");
    if (!is_irreducible(f)) throw InvalidArgument("roots_satisfy_power: f is reducible");
    if (e < 0) throw InvalidArgument("roots_satisfy_power: negative exponent");
    return detail::power_congruence_holds(*f.owner(), f.coeffs(), e);
}

}  // namespace ffdyn

#endif
