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

#ifndef FFDYN_MATRIX_HPP
#define FFDYN_MATRIX_HPP

#include <cstdint>
#include <cstring>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "exact.hpp"
#include "ff.hpp"
#include "poly.hpp"

namespace ffdyn {

/// Dense square matrix over a field, row-major.
class Matrix {
   public:
    Matrix(FieldPtr owner, unsigned n) : owner_(std::move(owner)), n_(n), a_(std::size_t{n} * n, 0) {}
    Matrix(FieldPtr owner, unsigned n, std::vector<Elem> entries) : owner_(std::move(owner)), n_(n), a_(std::move(entries)) {
        if (a_.size() != std::size_t{n} * n) throw InvalidArgument("matrix entry count does not match dimension");
    }

    static Matrix identity(const FieldPtr& f, unsigned n) {
        Matrix m(f, n);
        for (unsigned i = 0; i < n; ++i) m(i, i) = f->one();
        return m;
    }

    /// Row-major integer entries reduced into the prime subfield.
    static Matrix from_ints(const FieldPtr& f, unsigned n, std::initializer_list<std::int64_t> entries) {
        if (entries.size() != std::size_t{n} * n) throw InvalidArgument("matrix entry count does not match dimension");
        std::vector<Elem> a;
        for (auto v : entries) a.push_back(f->from_int(v));
        return {f, n, std::move(a)};
    }

    /// Matrix number idx of the q^{n^2} matrices; entry (0,0) is the least significant digit.
    static Matrix from_index(const FieldPtr& f, unsigned n, std::uint64_t idx) {
        Matrix m(f, n);
        const std::uint64_t q = f->order();
        for (auto& x : m.a_) {
            x = f->from_index(idx % q);
            idx /= q;
        }
        return m;
    }

    /// Jordan block J_{lambda, m}: lambda on the diagonal, ones above it.
    static Matrix jordan_block(const FieldPtr& f, Elem lambda, unsigned m) {
        Matrix j(f, m);
        for (unsigned i = 0; i < m; ++i) {
            j(i, i) = lambda;
            if (i + 1 < m) j(i, i + 1) = f->one();
        }
        return j;
    }

    static Matrix diagonal(const FieldPtr& f, const std::vector<Elem>& diag) {
        Matrix m(f, static_cast<unsigned>(diag.size()));
        for (unsigned i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
        return m;
    }

    const FieldPtr& owner() const { return owner_; }
    const FieldSpec& field() const { return *owner_; }
    unsigned dim() const { return n_; }
    const std::vector<Elem>& entries() const { return a_; }

    Elem& operator()(unsigned i, unsigned j) { return a_[std::size_t{i} * n_ + j]; }
    Elem operator()(unsigned i, unsigned j) const { return a_[std::size_t{i} * n_ + j]; }

    friend bool operator==(const Matrix& x, const Matrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        x.check(y);
        Matrix r(x.owner_, x.n_);
        multiply(*x.owner_, x.n_, x.a_.data(), y.a_.data(), r.a_.data());
        return r;
    }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        x.check(y);
        Matrix r(x.owner_, x.n_);
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.owner_->add(x.a_[i], y.a_[i]);
        return r;
    }

    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        x.check(y);
        Matrix r(x.owner_, x.n_);
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.owner_->sub(x.a_[i], y.a_[i]);
        return r;
    }

    Matrix scaled(Elem c) const {
        Matrix r = *this;
        for (auto& x : r.a_) x = owner_->mul(x, c);
        return r;
    }

    Matrix transpose() const {
        Matrix r(owner_, n_);
        for (unsigned i = 0; i < n_; ++i)
            for (unsigned j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    /// Transpose composed with x -> x^q entrywise; needs a field with a declared base.
    Matrix conj_transpose() const {
        if (!owner_->has_base_subfield()) throw InvalidArgument("conj_transpose: field has no declared base subfield");
        Matrix r(owner_, n_);
        for (unsigned i = 0; i < n_; ++i)
            for (unsigned j = 0; j < n_; ++j) r(j, i) = owner_->conj((*this)(i, j));
        return r;
    }

    bool is_identity() const {
        for (unsigned i = 0; i < n_; ++i)
            for (unsigned j = 0; j < n_; ++j)
                if ((*this)(i, j) != (i == j ? owner_->one() : 0)) return false;
        return true;
    }

    Elem det() const {
        const auto& F = *owner_;
        std::vector<Elem> m = a_;
        Elem d = F.one();
        for (unsigned c = 0; c < n_; ++c) {
            unsigned piv = c;
            while (piv < n_ && m[piv * n_ + c] == 0) ++piv;
            if (piv == n_) return 0;
            if (piv != c) {
                for (unsigned j = 0; j < n_; ++j) std::swap(m[piv * n_ + j], m[c * n_ + j]);
                d = F.neg(d);
            }
            const Elem pv = m[c * n_ + c];
            d = F.mul(d, pv);
            const Elem inv = F.inv(pv);
            for (unsigned r = c + 1; r < n_; ++r) {
                const Elem f = F.mul(m[r * n_ + c], inv);
                if (f == 0) continue;
                for (unsigned j = c; j < n_; ++j) m[r * n_ + j] = F.sub(m[r * n_ + j], F.mul(f, m[c * n_ + j]));
            }
        }
        return d;
    }

    /// Inverse by Gauss-Jordan; throws if singular.
    Matrix inverse() const {
        const auto& F = *owner_;
        std::vector<Elem> m = a_;
        Matrix r = identity(owner_, n_);
        for (unsigned c = 0; c < n_; ++c) {
            unsigned piv = c;
            while (piv < n_ && m[piv * n_ + c] == 0) ++piv;
            if (piv == n_) throw InvalidArgument("matrix is singular");
            for (unsigned j = 0; j < n_; ++j) {
                std::swap(m[piv * n_ + j], m[c * n_ + j]);
                std::swap(r(piv, j), r(c, j));
            }
            const Elem inv = F.inv(m[c * n_ + c]);
            for (unsigned j = 0; j < n_; ++j) {
                m[c * n_ + j] = F.mul(m[c * n_ + j], inv);
                r(c, j) = F.mul(r(c, j), inv);
            }
            for (unsigned row = 0; row < n_; ++row) {
                if (row == c) continue;
                const Elem f = m[row * n_ + c];
                if (f == 0) continue;
                for (unsigned j = 0; j < n_; ++j) {
                    m[row * n_ + j] = F.sub(m[row * n_ + j], F.mul(f, m[c * n_ + j]));
                    r(row, j) = F.sub(r(row, j), F.mul(f, r(c, j)));
                }
            }
        }
        return r;
    }

    /// Canonical byte string, used as a hash key.
    std::string encode() const {
        std::string s(a_.size() * sizeof(Elem), '\0');
        std::memcpy(s.data(), a_.data(), s.size());
        return s;
    }

    std::string to_string() const {
        std::string s = "[";
        for (unsigned i = 0; i < n_; ++i) {
            s += i ? ", [" : "[";
            for (unsigned j = 0; j < n_; ++j) s += (j ? ", " : "") + owner_->to_string((*this)(i, j));
            s += "]";
        }
        return s + "]";
    }

    static void multiply(const FieldSpec& F, unsigned n, const Elem* x, const Elem* y, Elem* out) {
        if (F.degree() == 1 && F.characteristic() < (1U << 26)) {
            const std::uint64_t p = F.characteristic();
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = 0; j < n; ++j) {
                    std::uint64_t s = 0;
                    for (unsigned k = 0; k < n; ++k) s += x[i * n + k] * y[k * n + j];
                    out[i * n + j] = s % p;
                }
            return;
        }
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                Elem s = 0;
                for (unsigned k = 0; k < n; ++k) s = F.add(s, F.mul(x[i * n + k], y[k * n + j]));
                out[i * n + j] = s;
            }
    }

   private:
    void check(const Matrix& o) const {
        if (n_ != o.n_) throw InvalidArgument("matrix dimension mismatch");
        if (owner_ != o.owner_ && !(*owner_ == *o.owner_)) throw InvalidArgument("matrices over different fields");
    }

    FieldPtr owner_;
    unsigned n_;
    std::vector<Elem> a_;
};

/// A^k for k >= 1.
inline Matrix mat_power(const Matrix& A, const ExactInt& k) {
    if (k < 1) throw InvalidArgument("mat_power: exponent must be at least 1");
    Matrix r = Matrix::identity(A.owner(), A.dim());
    const auto bits = static_cast<unsigned>(boost::multiprecision::msb(k)) + 1;
    for (unsigned i = bits; i-- > 0;) {
        r = r * r;
        if (boost::multiprecision::bit_test(k, i)) r = r * A;
    }
    return r;
}

inline Matrix mat_power(const Matrix& A, std::uint64_t k) { return mat_power(A, ExactInt(k)); }

namespace detail {

/// Minimal polynomial coefficients (monic, constant first) from the first
/// linear dependency among I, A, A^2, ... viewed as vectors of length n^2.
inline Coeffs min_poly_coeffs(const FieldSpec& F, unsigned n, const Elem* a) {
    const std::size_t N = std::size_t{n} * n;
    // Rows of an echelon basis, each with the combination of powers producing it.
    std::vector<std::vector<Elem>> basis, combo;
    std::vector<std::size_t> pivots;
    std::vector<Elem> power(N, 0), next(N);
    for (unsigned i = 0; i < n; ++i) power[i * n + i] = F.one();
    for (unsigned k = 0; k <= n; ++k) {
        std::vector<Elem> v = power;
        std::vector<Elem> c(k + 1, 0);
        c[k] = F.one();
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const Elem f = v[pivots[b]];
            if (f == 0) continue;
            for (std::size_t j = 0; j < N; ++j) v[j] = F.sub(v[j], F.mul(f, basis[b][j]));
            for (std::size_t j = 0; j < combo[b].size(); ++j) c[j] = F.sub(c[j], F.mul(f, combo[b][j]));
        }
        std::size_t piv = 0;
        while (piv < N && v[piv] == 0) ++piv;
        if (piv == N) return c;  // sum c_j A^j = 0 with c_k = 1
        const Elem inv = F.inv(v[piv]);
        for (auto& x : v) x = F.mul(x, inv);
        for (auto& x : c) x = F.mul(x, inv);
        basis.push_back(std::move(v));
        combo.push_back(std::move(c));
        pivots.push_back(piv);
        Matrix::multiply(F, n, power.data(), a, next.data());
        power.swap(next);
    }
    throw std::logic_error("min_poly: no dependency found up to degree n");
}

/// Characteristic polynomial by reduction to upper Hessenberg form.
inline Coeffs char_poly_coeffs(const FieldSpec& F, unsigned n, std::vector<Elem> h) {
    auto at = [&](unsigned i, unsigned j) -> Elem& { return h[std::size_t{i} * n + j]; };
    for (unsigned c = 0; c + 2 <= n; ++c) {
        unsigned piv = c + 1;
        while (piv < n && at(piv, c) == 0) ++piv;
        if (piv == n) continue;
        if (piv != c + 1) {
            for (unsigned j = 0; j < n; ++j) std::swap(at(piv, j), at(c + 1, j));
            for (unsigned i = 0; i < n; ++i) std::swap(at(i, piv), at(i, c + 1));
        }
        const Elem inv = F.inv(at(c + 1, c));
        for (unsigned r = c + 2; r < n; ++r) {
            const Elem f = F.mul(at(r, c), inv);
            if (f == 0) continue;
            for (unsigned j = 0; j < n; ++j) at(r, j) = F.sub(at(r, j), F.mul(f, at(c + 1, j)));
            for (unsigned i = 0; i < n; ++i) at(i, c + 1) = F.add(at(i, c + 1), F.mul(f, at(i, r)));
        }
    }
    // p_k = char poly of the leading k x k block.
    std::vector<Coeffs> p(n + 1);
    p[0] = Coeffs{F.one()};
    for (unsigned k = 1; k <= n; ++k) {
        p[k] = poly_mul(F, Coeffs{F.neg(at(k - 1, k - 1)), F.one()}, p[k - 1]);
        Elem prod = F.one();
        for (unsigned i = k - 1; i-- > 0;) {
            prod = F.mul(prod, at(i + 1, i));
            const Elem coef = F.mul(prod, at(i, k - 1));
            if (coef == 0) continue;
            p[k] = poly_sub(F, p[k], poly_mul(F, Coeffs{coef}, p[i]));
        }
    }
    return p[n];
}

}  // namespace detail

inline Poly min_poly(const Matrix& A) { return {A.owner(), detail::min_poly_coeffs(A.field(), A.dim(), A.entries().data())}; }

inline Poly char_poly(const Matrix& A) { return {A.owner(), detail::char_poly_coeffs(A.field(), A.dim(), A.entries())}; }

}  // namespace ffdyn

#endif
