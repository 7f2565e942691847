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

// The power map x -> x^L on matrices: explicit orbits, and the structural
// periodicity test read off the minimal polynomial.
//
// A is periodic iff t divides its minimal polynomial at most once and every
// other irreducible factor g, of degree m, has t^{e_m} = 1 mod g, where e_m
// is the L-free part of q^m - 1.

#ifndef FFDYN_DYNAMICS_HPP
#define FFDYN_DYNAMICS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "counting.hpp"
#include "errors.hpp"
#include "exact.hpp"
#include "ff.hpp"
#include "matrix.hpp"
#include "poly.hpp"

namespace ffdyn {

struct OrbitReport {
    ExactInt preperiod = 0;
    ExactInt period = 1;
    bool periodic = false;
};

inline constexpr std::uint64_t kDefaultOrbitCap = std::uint64_t{1} << 20;

/// Iterates A -> A^L until a state repeats.
inline OrbitReport orbit_report(const Matrix& A, std::uint64_t L, std::uint64_t memo_cap = kDefaultOrbitCap) {
    if (L < 2) throw InvalidArgument("orbit_report: L must be at least 2");
    std::unordered_map<std::string, std::uint64_t> seen;
    Matrix x = A;
    for (std::uint64_t step = 0;; ++step) {
        auto [it, fresh] = seen.emplace(x.encode(), step);
        if (!fresh) {
            OrbitReport r;
            r.preperiod = it->second;
            r.period = step - it->second;
            r.periodic = it->second == 0;
            return r;
        }
        if (seen.size() > memo_cap) throw GuardExceeded("orbit_report: orbit longer than the memo cap");
        x = mat_power(x, L);
    }
}

/// Hypotheses of the structural test for a field of order q: L prime,
/// gcd(L, q) = 1 and L | q - 1.
inline void check_periodicity_hypotheses(std::uint64_t q, std::uint64_t L) {
    CountParams::make(q, L, 1, CountParams::kLDividesQMinus1);
}

/// Structural periodicity with per-thread memoization of verdicts by minimal
/// polynomial. Not thread-safe; give each worker its own.
class PeriodicityContext {
   public:
    PeriodicityContext(FieldPtr F, std::uint64_t L, bool bypass_hypothesis = false) : F_(std::move(F)), L_(L) {
        if (bypass_hypothesis)
            CountParams::make(F_->order(), L, 1);
        else
            check_periodicity_hypotheses(F_->order(), L);
    }

    const FieldPtr& field() const { return F_; }
    std::uint64_t L() const { return L_; }

    bool periodic(const Matrix& A) { return periodic(A.dim(), A.entries().data()); }

    bool periodic(unsigned n, const Elem* entries) {
        const Coeffs mp = detail::min_poly_coeffs(*F_, n, entries);
        return periodic_min_poly(mp);
    }

    bool periodic_min_poly(const Coeffs& mp) {
        std::string key(reinterpret_cast<const char*>(mp.data()), mp.size() * sizeof(Elem));
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        const bool v = decide(mp);
        cache_.emplace(std::move(key), v);
        return v;
    }

    /// L-free part of q^m - 1.
    const ExactInt& e(unsigned m) {
        while (e_.size() <= m) e_.push_back(e_.empty() ? ExactInt(0) : strip_adic(L_, ipow(F_->order_exact(), e_.size()) - 1));
        return e_[m];
    }

   private:
    bool decide(Coeffs h) {
        const auto& F = *F_;
        std::size_t zeros = 0;
        while (zeros < h.size() && h[zeros] == 0) ++zeros;
        if (zeros >= 2) return false;
        h.erase(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(zeros));
        // Distinct-degree split of the nonzero-root part; repeated factors are
        // allowed, only the root orders matter.
        Coeffs rem = h;
        Coeffs x;  // t^{q^m} mod rem
        for (unsigned m = 1; rem.size() > 1; ++m) {
            detail::ModRing R(F, rem);
            x = x.empty() ? R.t() : R.reduce(x);
            x = R.pow(x, F.order());
            Coeffs xt = x;
            if (xt.size() == 1)
                xt = detail::poly_sub(F, xt, Coeffs{0, F.one()});
            else
                xt[1] = F.sub(xt[1], F.one());
            detail::trim(xt);
            Coeffs g = detail::poly_gcd(F, rem, xt);
            if (xt.empty()) g = rem;
            if (g.size() <= 1) continue;
            detail::ModRing G(F, g);
            if (!G.is_one(G.pow_t(e(m)))) return false;
            for (;;) {
                Coeffs common = detail::poly_gcd(F, rem, g);
                if (common.size() <= 1) break;
                rem = detail::poly_divmod(F, rem, common).first;
            }
            if (rem.size() > 1) x = detail::ModRing(F, rem).reduce(x);
        }
        return true;
    }

    FieldPtr F_;
    std::uint64_t L_;
    std::vector<ExactInt> e_;
    std::unordered_map<std::string, bool> cache_;
};

/// Periodicity of A under x -> x^L, decided from its minimal polynomial.
/// Requires gcd(L, q) = 1 and L | q - 1 unless bypass_hypothesis is set.
inline bool is_periodic_structural(const Matrix& A, std::uint64_t L, bool bypass_hypothesis = false) {
    PeriodicityContext ctx(A.owner(), L, bypass_hypothesis);
    return ctx.periodic(A);
}

/// 0 is periodic, and a unit is periodic iff its order is prime to L.
inline bool is_field_periodic(const FieldSpec& F, Elem x, std::uint64_t L) {
    if (x == 0) return true;
    return F.pow(x, strip_adic(L, F.order_exact() - 1)) == F.one();
}

/// Number of periodic points of x -> x^L on the field: 1 + e_1.
inline ExactInt field_periodic_count(const FieldSpec& F, std::uint64_t L) { return 1 + e_value(F.order(), L, 1); }

/// The periodic points themselves, in index order.
inline std::vector<Elem> field_periodic_points(const FieldSpec& F, std::uint64_t L) {
    CountParams::make(F.order(), L, 1);
    std::vector<Elem> out;
    for (std::uint64_t i = 0; i < F.order(); ++i)
        if (is_field_periodic(F, F.from_index(i), L)) out.push_back(F.from_index(i));
    return out;
}

/// Periodic points found by iterating the map on every element.
inline std::vector<Elem> field_periodic_points_by_orbit(const FieldSpec& F, std::uint64_t L) {
    const std::uint64_t q = F.order();
    std::vector<Elem> out;
    std::vector<std::uint64_t> image(q);
    for (std::uint64_t i = 0; i < q; ++i) image[i] = F.index(F.pow(F.from_index(i), L));
    // An element is periodic iff it lies on a cycle of the functional graph.
    std::vector<char> on_cycle(q, 0);
    std::vector<std::uint64_t> state(q, 0);  // 0 new, 1 in progress, 2 done
    for (std::uint64_t s = 0; s < q; ++s) {
        if (state[s]) continue;
        std::vector<std::uint64_t> path;
        std::uint64_t x = s;
        while (state[x] == 0) {
            state[x] = 1;
            path.push_back(x);
            x = image[x];
        }
        if (state[x] == 1)
            for (std::uint64_t y = x;;) {
                on_cycle[y] = 1;
                y = image[y];
                if (y == x) break;
            }
        for (auto y : path) state[y] = 2;
    }
    for (std::uint64_t i = 0; i < q; ++i)
        if (on_cycle[i]) out.push_back(F.from_index(i));
    return out;
}

}  // namespace ffdyn

#endif
