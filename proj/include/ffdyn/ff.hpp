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

// Finite fields F_{p^d} = F_p[t]/(m(t)) with m the lexicographically least
// monic irreducible of degree d. Elements are residue vectors packed into a
// 64-bit word, digit i (the coefficient of t^i) in bits [i*w, (i+1)*w).

#ifndef FFDYN_FF_HPP
#define FFDYN_FF_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "exact.hpp"

namespace ffdyn {

using Elem = std::uint64_t;

namespace detail {

using ResidueVec = std::vector<std::uint64_t>;

inline void trim(ResidueVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    std::uint64_t r = 1, e = p - 2;
    a %= p;
    while (e) {
        if (e & 1U) r = r * a % p;
        a = a * a % p;
        e >>= 1U;
    }
    return r;
}

// a mod f over F_p, f monic.
inline ResidueVec rem_p(ResidueVec a, const ResidueVec& f, std::uint64_t p) {
    const std::size_t n = f.size() - 1;
    trim(a);
    while (a.size() > n) {
        const std::uint64_t c = a.back() % p;
        const std::size_t shift = a.size() - 1 - n;
        for (std::size_t i = 0; i < n; ++i) a[shift + i] = (a[shift + i] + c * ((p - f[i]) % p)) % p;
        a.pop_back();
        trim(a);
    }
    return a;
}

inline ResidueVec mulmod_p(const ResidueVec& a, const ResidueVec& b, const ResidueVec& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    ResidueVec prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    return rem_p(std::move(prod), f, p);
}

inline ResidueVec powmod_p(ResidueVec base, std::uint64_t e, const ResidueVec& f, std::uint64_t p) {
    ResidueVec r{1};
    base = rem_p(std::move(base), f, p);
    while (e) {
        if (e & 1U) r = mulmod_p(r, base, f, p);
        e >>= 1U;
        if (e) base = mulmod_p(base, base, f, p);
    }
    return r;
}

inline ResidueVec gcd_p(ResidueVec a, ResidueVec b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        const std::uint64_t inv = inv_mod(b.back(), p);
        ResidueVec bm(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) bm[i] = b[i] * inv % p;
        a = rem_p(std::move(a), bm, p);
        std::swap(a, b);
    }
    return a;
}

// Rabin's test over the prime field; f monic of degree >= 1.
inline bool is_irreducible_prime_field(const ResidueVec& f, std::uint64_t p) {
    const std::size_t n = f.size() - 1;
    if (n == 1) return true;
    std::vector<ResidueVec> frob(n + 1);
    frob[0] = ResidueVec{0, 1};
    for (std::size_t k = 1; k <= n; ++k) frob[k] = powmod_p(frob[k - 1], p, f, p);
    ResidueVec x = frob[n];
    x.resize(std::max<std::size_t>(x.size(), 2), 0);
    if (!(x[1] == 1 && x[0] == 0 && std::all_of(x.begin() + 2, x.end(), [](auto c) { return c == 0; })))
        return false;
    for (auto [r, k] : factorize(n)) {
        ResidueVec y = frob[n / r];
        y.resize(std::max<std::size_t>(y.size(), 2), 0);
        y[1] = (y[1] + p - 1) % p;
        auto g = gcd_p(y, f, p);
        if (g.size() > 1) return false;
    }
    return true;
}

}  // namespace detail

/// Immutable description of F_{p^d}. Shared by every element, polynomial and
/// matrix over it; safe to use from several threads.
class FieldSpec {
   public:
    static constexpr unsigned kMaxDegree = 20;

    FieldSpec(std::uint32_t p, unsigned d, std::vector<std::uint32_t> modulus, unsigned base_degree)
        : p_(p), d_(d), modulus_(std::move(modulus)), base_degree_(base_degree) {
        q_ = 1;
        for (unsigned i = 0; i < d_; ++i) q_ *= p_;
        width_ = static_cast<unsigned>(std::bit_width(static_cast<std::uint64_t>(p_ - 1)));
        if (width_ == 0) width_ = 1;
        mask_ = (Elem{1} << width_) - 1;
        for (unsigned i = 0; i < d_; ++i) neg_modulus_[i] = (p_ - modulus_[i]) % p_;
        if (base_degree_ > 0) {
            base_q_ = 1;
            for (unsigned i = 0; i < base_degree_; ++i) base_q_ *= p_;
        }
    }

    std::uint32_t characteristic() const { return p_; }
    unsigned degree() const { return d_; }
    std::uint64_t order() const { return q_; }
    ExactInt order_exact() const { return ExactInt(q_); }
    /// Modulus coefficients, constant term first, length d + 1. For d = 1 this is t.
    std::span<const std::uint32_t> modulus() const { return modulus_; }

    /// True when built as F_{q^2} over a declared base F_q (unitary work).
    bool has_base_subfield() const { return base_degree_ > 0; }
    unsigned base_degree() const { return base_degree_; }
    std::uint64_t base_order() const {
        if (!has_base_subfield()) throw InvalidArgument("field has no declared base subfield");
        return base_q_;
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    std::uint32_t digit(Elem a, unsigned i) const { return static_cast<std::uint32_t>((a >> (i * width_)) & mask_); }

    Elem from_digits(std::span<const std::uint32_t> digits) const {
        Elem r = 0;
        for (unsigned i = 0; i < d_ && i < digits.size(); ++i) r |= Elem{digits[i] % p_} << (i * width_);
        return r;
    }
    std::vector<std::uint32_t> digits(Elem a) const {
        std::vector<std::uint32_t> out(d_);
        for (unsigned i = 0; i < d_; ++i) out[i] = digit(a, i);
        return out;
    }

    /// Elements are numbered 0 .. q-1 by sum digit_i p^i; this is the lexicographic order.
    Elem from_index(std::uint64_t idx) const {
        if (d_ == 1) return idx;
        Elem r = 0;
        for (unsigned i = 0; i < d_; ++i) {
            r |= Elem{idx % p_} << (i * width_);
            idx /= p_;
        }
        return r;
    }
    std::uint64_t index(Elem a) const {
        if (d_ == 1) return a;
        std::uint64_t idx = 0;
        for (unsigned i = d_; i-- > 0;) idx = idx * p_ + digit(a, i);
        return idx;
    }

    Elem from_int(std::int64_t v) const {
        const auto p = static_cast<std::int64_t>(p_);
        return static_cast<Elem>(((v % p) + p) % p);
    }

    Elem add(Elem a, Elem b) const {
        if (d_ == 1) {
            const Elem s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        if (p_ == 2) return a ^ b;
        Elem r = 0;
        for (unsigned i = 0, sh = 0; i < d_; ++i, sh += width_) {
            Elem s = ((a >> sh) & mask_) + ((b >> sh) & mask_);
            if (s >= p_) s -= p_;
            r |= s << sh;
        }
        return r;
    }

    Elem neg(Elem a) const {
        if (d_ == 1) return a == 0 ? 0 : p_ - a;
        if (p_ == 2) return a;
        Elem r = 0;
        for (unsigned i = 0, sh = 0; i < d_; ++i, sh += width_) {
            const Elem x = (a >> sh) & mask_;
            r |= (x == 0 ? 0 : p_ - x) << sh;
        }
        return r;
    }

    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const {
        if (d_ == 1) return a * b % p_;
        if (d_ == 2) {
            const Elem a0 = a & mask_, a1 = a >> width_, b0 = b & mask_, b1 = b >> width_;
            const Elem top = a1 * b1 % p_;
            const Elem r0 = (a0 * b0 + top * neg_modulus_[0]) % p_;
            const Elem r1 = (a0 * b1 + a1 * b0 + top * neg_modulus_[1]) % p_;
            return r0 | (r1 << width_);
        }
        std::array<std::uint64_t, kMaxDegree> da{}, db{};
        std::array<std::uint64_t, 2 * kMaxDegree> prod{};
        unsigned na = 0, nb = 0;
        for (unsigned i = 0; i < d_; ++i) {
            da[i] = digit(a, i);
            db[i] = digit(b, i);
            if (da[i]) na = i + 1;
            if (db[i]) nb = i + 1;
        }
        if (na == 0 || nb == 0) return 0;
        for (unsigned i = 0; i < na; ++i) {
            if (!da[i]) continue;
            for (unsigned j = 0; j < nb; ++j) prod[i + j] += da[i] * db[j];
        }
        for (unsigned k = na + nb - 1; k-- > d_;) {
            const std::uint64_t c = prod[k] % p_;
            if (c == 0) continue;
            for (unsigned i = 0; i < d_; ++i) prod[k - d_ + i] += c * neg_modulus_[i];
        }
        Elem r = 0;
        for (unsigned i = 0; i < d_; ++i) r |= Elem{prod[i] % p_} << (i * width_);
        return r;
    }

    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = one();
        while (e) {
            if (e & 1U) r = mul(r, a);
            e >>= 1U;
            if (e) a = mul(a, a);
        }
        return r;
    }

    /// 0^0 = 1.
    Elem pow(Elem a, const ExactInt& e) const {
        if (e < 0) throw InvalidArgument("negative exponent");
        Elem r = one();
        const auto bits = e == 0 ? 0U : static_cast<unsigned>(boost::multiprecision::msb(e)) + 1;
        for (unsigned i = bits; i-- > 0;) {
            r = mul(r, r);
            if (boost::multiprecision::bit_test(e, i)) r = mul(r, a);
        }
        return r;
    }

    Elem inv(Elem a) const {
        if (a == 0) throw InvalidArgument("inverse of zero");
        return pow(a, q_ - 2);
    }

    /// x -> x^q for the declared base F_q.
    Elem conj(Elem a) const { return pow(a, base_order()); }

    std::string to_string(Elem a) const {
        if (d_ == 1) return std::to_string(a);
        std::string s;
        for (unsigned i = d_; i-- > 0;) {
            const auto c = digit(a, i);
            if (c == 0) continue;
            if (!s.empty()) s += "+";
            if (i == 0 || c != 1) s += std::to_string(c);
            if (i >= 1) s += "t";
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s.empty() ? "0" : s;
    }

    bool operator==(const FieldSpec& o) const {
        return p_ == o.p_ && d_ == o.d_ && modulus_ == o.modulus_ && base_degree_ == o.base_degree_;
    }

   private:
    std::uint32_t p_;
    unsigned d_;
    std::vector<std::uint32_t> modulus_;
    unsigned base_degree_;
    std::uint64_t q_ = 1;
    std::uint64_t base_q_ = 0;
    unsigned width_ = 1;
    Elem mask_ = 1;
    std::array<std::uint64_t, kMaxDegree> neg_modulus_{};
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

namespace detail {

inline std::vector<std::uint32_t> least_irreducible(std::uint32_t p, unsigned d) {
    if (d == 1) return {0, 1};
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    // Index i encodes the lower coefficients, constant term as the least
    // significant digit, so increasing i walks the order that compares the
    // constant term last.
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        ResidueVec f(d + 1);
        std::uint64_t x = idx;
        for (unsigned i = 0; i < d; ++i) {
            f[i] = x % p;
            x /= p;
        }
        f[d] = 1;
        if (f[0] == 0) continue;
        if (is_irreducible_prime_field(f, p)) return {f.begin(), f.end()};
    }
    throw std::logic_error("no irreducible polynomial found");
}

inline FieldPtr field_registry(std::uint32_t p, unsigned d, unsigned base_degree) {
    static std::mutex mu;
    static std::map<std::tuple<std::uint32_t, unsigned, unsigned>, FieldPtr> cache;
    const std::lock_guard lock(mu);
    auto key = std::make_tuple(p, d, base_degree);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    auto f = std::make_shared<const FieldSpec>(p, d, least_irreducible(p, d), base_degree);
    cache.emplace(key, f);
    return f;
}

}  // namespace detail

/// F_{p^d}. Throws for non-prime p, d < 1, or a field too large to represent.
inline FieldPtr make_field(std::uint64_t p, unsigned d) {
    if (!is_prime(p)) throw InvalidArgument("characteristic " + std::to_string(p) + " is not prime");
    if (d < 1) throw InvalidArgument("extension degree must be at least 1");
    if (d == 1) {
        if (p >= (std::uint64_t{1} << 31)) throw GuardExceeded("prime field too large");
    } else {
        std::uint64_t q = 1;
        for (unsigned i = 0; i < d; ++i) {
            q *= p;
            if (q > (std::uint64_t{1} << 20)) throw GuardExceeded("extension fields are limited to q <= 2^20");
        }
    }
    return detail::field_registry(static_cast<std::uint32_t>(p), d, 0);
}

/// F_{q^2} with q = p^base_degree, tagged with its base subfield F_q.
inline FieldPtr make_quadratic_extension(std::uint64_t p, unsigned base_degree) {
    if (base_degree < 1) throw InvalidArgument("base degree must be at least 1");
    make_field(p, 2 * base_degree);  // validation and guard
    return detail::field_registry(static_cast<std::uint32_t>(p), 2 * base_degree, base_degree);
}

/// Field of order q, q a prime power.
inline FieldPtr make_field_of_order(std::uint64_t q) {
    auto pp = prime_power(q);
    if (!pp) throw InvalidArgument(std::to_string(q) + " is not a prime power");
    return make_field(pp->first, pp->second);
}

/// A field element that carries its field.
class FieldElem {
   public:
    FieldElem(FieldPtr owner, Elem value) : owner_(std::move(owner)), value_(value) {}

    static FieldElem from_int(const FieldPtr& f, std::int64_t v) { return {f, f->from_int(v)}; }
    static FieldElem from_coeffs(const FieldPtr& f, std::span<const std::uint32_t> coeffs) {
        for (auto c : coeffs)
            if (c >= f->characteristic()) throw InvalidArgument("residue out of range");
        if (coeffs.size() > f->degree()) throw InvalidArgument("too many coefficients");
        return {f, f->from_digits(coeffs)};
    }

    const FieldPtr& owner() const { return owner_; }
    Elem value() const { return value_; }
    std::vector<std::uint32_t> coeffs() const { return owner_->digits(value_); }
    bool is_zero() const { return value_ == 0; }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
        check(a, b);
        return {a.owner_, a.owner_->add(a.value_, b.value_)};
    }
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b) {
        check(a, b);
        return {a.owner_, a.owner_->sub(a.value_, b.value_)};
    }
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
        check(a, b);
        return {a.owner_, a.owner_->mul(a.value_, b.value_)};
    }
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b) {
        check(a, b);
        return {a.owner_, a.owner_->mul(a.value_, a.owner_->inv(b.value_))};
    }
    FieldElem operator-() const { return {owner_, owner_->neg(value_)}; }
    friend bool operator==(const FieldElem& a, const FieldElem& b) {
        return a.value_ == b.value_ && (a.owner_ == b.owner_ || *a.owner_ == *b.owner_);
    }
    std::string to_string() const { return owner_->to_string(value_); }

   private:
    static void check(const FieldElem& a, const FieldElem& b) {
        if (a.owner_ != b.owner_ && !(*a.owner_ == *b.owner_)) throw InvalidArgument("elements of different fields");
    }
    FieldPtr owner_;
    Elem value_;
};

/// x^k for k >= 0, with 0^0 = 1.
inline FieldElem elem_pow(const FieldElem& x, const ExactInt& k) {
    if (k < 0) throw InvalidArgument("elem_pow: negative exponent");
    return {x.owner(), x.owner()->pow(x.value(), k)};
}

/// Least k >= 1 with x^k = 1, found by stripping prime factors off q - 1.
inline ExactInt mult_order(const FieldSpec& f, Elem x) {
    if (x == 0) throw InvalidArgument("mult_order: zero has no multiplicative order");
    std::uint64_t n = f.order() - 1;
    for (auto [r, k] : factorize(f.order() - 1)) {
        for (unsigned i = 0; i < k; ++i) {
            if (f.pow(x, n / r) != f.one()) break;
            n /= r;
        }
    }
    return n;
}

inline ExactInt mult_order(const FieldElem& x) { return mult_order(*x.owner(), x.value()); }

/// The bar map x -> x^q on F_{q^2}.
inline FieldElem conj_q(const FieldElem& x) {
    if (!x.owner()->has_base_subfield()) throw InvalidArgument("conj_q: field has no declared base subfield");
    return {x.owner(), x.owner()->conj(x.value())};
}

}  // namespace ffdyn

#endif
