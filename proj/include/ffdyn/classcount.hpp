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

// Class-based periodic counts in M_n(q) and GL_n(q), the closed forms for
// n = 2 and 3, and the limiting proportions as q -> infinity with
// v_L(q - 1) = c fixed.
//
// A conjugacy class is a multiset of (irreducible f, partition) pairs plus,
// in M_n, a zero eigenvalue. Periodic classes are those whose zero part is
// diagonal and whose irreducibles all have roots of order prime to L; the
// number of such irreducibles of degree d is d_plain(q, L, d).

#ifndef FFDYN_CLASSCOUNT_HPP
#define FFDYN_CLASSCOUNT_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "counting.hpp"
#include "errors.hpp"
#include "exact.hpp"
#include "groups.hpp"
#include "matrix.hpp"
#include "poly.hpp"

namespace ffdyn {

struct Partition {
    std::vector<unsigned> parts;  // descending

    unsigned size() const {
        unsigned s = 0;
        for (auto x : parts) s += x;
        return s;
    }

    /// (part, multiplicity), parts ascending.
    std::vector<std::pair<unsigned, unsigned>> multiplicities() const {
        std::map<unsigned, unsigned> m;
        for (auto x : parts) ++m[x];
        return {m.begin(), m.end()};
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
        return s + ")";
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// Partitions of ell, each once, in reverse lexicographic order.
inline std::vector<Partition> partitions(unsigned ell) {
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned rest, unsigned max_part) {
        if (rest == 0) {
            out.push_back({cur});
            return;
        }
        for (unsigned p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(ell, ell);
    return out;
}

struct SplitPartitionPair {
    Partition group_plus;
    Partition group_minus;
};

/// Ordered pairs of partitions with sizes summing to ell.
inline std::vector<SplitPartitionPair> split_partitions(unsigned ell) {
    std::vector<SplitPartitionPair> out;
    for (unsigned a = 0; a <= ell; ++a)
        for (const auto& plus : partitions(a))
            for (const auto& minus : partitions(ell - a)) out.push_back({plus, minus});
    return out;
}

struct ClassBlock {
    unsigned degree = 1;
    Partition lambda;

    friend auto operator<=>(const ClassBlock&, const ClassBlock&) = default;
};

struct ClassType {
    unsigned zero_mult = 0;
    std::vector<ClassBlock> blocks;  // sorted

    unsigned n() const {
        unsigned s = zero_mult;
        for (const auto& b : blocks) s += b.degree * b.lambda.size();
        return s;
    }

    bool regular_semisimple() const {
        if (zero_mult != 0) return false;
        for (const auto& b : blocks)
            if (b.lambda.parts != std::vector<unsigned>{1}) return false;
        return true;
    }

    std::string to_string() const {
        std::string s = "{";
        if (zero_mult) s += "0^" + std::to_string(zero_mult);
        for (std::size_t i = 0; i < blocks.size(); ++i)
            s += (i || zero_mult ? " " : "") + std::string("d") + std::to_string(blocks[i].degree) + blocks[i].lambda.to_string();
        return s + "}";
    }
};

/// Every ClassType of total size n, each once. With allow_zero, the zero
/// eigenvalue takes a diagonal part of any size (the only shape a periodic
/// matrix can have there).
inline std::vector<ClassType> class_types(unsigned n, bool allow_zero) {
    std::vector<ClassType> out;
    for (unsigned m0 = 0; m0 <= (allow_zero ? n : 0); ++m0) {
        const unsigned rest = n - m0;
        std::vector<ClassBlock> kinds;
        for (unsigned d = 1; d <= rest; ++d)
            for (unsigned s = 1; d * s <= rest; ++s)
                for (auto& lam : partitions(s)) kinds.push_back({d, lam});
        std::sort(kinds.begin(), kinds.end());
        std::vector<ClassBlock> cur;
        std::function<void(std::size_t, unsigned)> rec = [&](std::size_t from, unsigned left) {
            if (left == 0) {
                out.push_back({m0, cur});
                return;
            }
            for (std::size_t i = from; i < kinds.size(); ++i) {
                const unsigned sz = kinds[i].degree * kinds[i].lambda.size();
                if (sz > left) continue;
                cur.push_back(kinds[i]);
                rec(i, left - sz);
                cur.pop_back();
            }
        };
        rec(0, rest);
    }
    return out;
}

/// q^gamma prod |GL_{l_k}(q^d)| over blocks and their part multiplicities,
/// gamma = sum over blocks of d (2 sum_{a<b} lambda_a l_a l_b + sum_k (lambda_k - 1) l_k^2).
inline ExactInt gl_centralizer_order(const ClassType& ct, const ExactInt& q) {
    if (ct.zero_mult != 0) throw InvalidArgument("gl_centralizer_order: expects a ClassType with zero_mult = 0");
    for (const auto& b : ct.blocks)
        if (b.degree < 1 || b.lambda.parts.empty()) throw InvalidArgument("gl_centralizer_order: malformed block");
    ExactInt gamma = 0;
    ExactInt prod = 1;
    for (const auto& b : ct.blocks) {
        const auto mult = b.lambda.multiplicities();
        ExactInt g = 0;
        for (std::size_t a = 0; a < mult.size(); ++a) {
            for (std::size_t c = a + 1; c < mult.size(); ++c) g += 2 * ExactInt(mult[a].first) * mult[a].second * mult[c].second;
            g += ExactInt(mult[a].first - 1) * mult[a].second * mult[a].second;
            prod *= gl_order(mult[a].second, ipow(q, b.degree));
        }
        gamma += b.degree * g;
    }
    return ipow(q, gamma.convert_to<std::uint64_t>()) * prod;
}

/// Number of conjugacy classes of this type whose irreducibles are drawn,
/// distinct within each degree, from good[d] candidates.
inline ExactInt class_type_multiplicity(const ClassType& ct, const std::function<ExactInt(unsigned)>& good) {
    std::map<unsigned, std::map<Partition, unsigned>> by_degree;
    for (const auto& b : ct.blocks) ++by_degree[b.degree][b.lambda];
    ExactInt r = 1;
    for (const auto& [d, parts] : by_degree) {
        unsigned total = 0;
        ExactInt denom = 1;
        for (const auto& [lam, k] : parts) {
            total += k;
            denom *= factorial(k);
        }
        const ExactInt g = good(d);
        if (g < total) return 0;
        r *= falling_factorial(g, total) / denom;
    }
    return r;
}

/// Size of the GL_n(q)-class of a matrix of this type (in M_n for zero_mult > 0).
inline ExactInt class_size(const ClassType& ct, const ExactInt& q) {
    ClassType nz = ct;
    nz.zero_mult = 0;
    return gl_order(ct.n(), q) / (gl_centralizer_order(nz, q) * gl_order(ct.zero_mult, q));
}

enum class ClassFilter { kAll, kRegularSemisimple };

inline constexpr unsigned kDefaultClassGuard = 6;

/// Periodic points of x -> x^L in M_n(q) or GL_n(q), summed over ClassTypes.
inline ExactInt exact_periodic_count(Family family, unsigned n, std::uint64_t q, std::uint64_t L,
                                     ClassFilter filter = ClassFilter::kAll, unsigned guard = kDefaultClassGuard) {
    if (family != Family::kM && family != Family::kGL) throw InvalidArgument("exact_periodic_count: only M and GL are supported");
    if (n > guard) throw GuardExceeded("exact_periodic_count: n = " + std::to_string(n) + " exceeds the class guard " + std::to_string(guard));
    CountParams::make(q, L, n, CountParams::kLDividesQMinus1);
    std::vector<ExactInt> good(n + 1, 0);
    for (unsigned d = 1; d <= n; ++d) good[d] = d_plain(q, L, d);
    ExactInt total = 0;
    for (const auto& ct : class_types(n, family == Family::kM)) {
        if (filter == ClassFilter::kRegularSemisimple && !ct.regular_semisimple()) continue;
        const ExactInt mult = class_type_multiplicity(ct, [&](unsigned d) { return good[d]; });
        if (mult == 0) continue;
        total += mult * class_size(ct, q);
    }
    return total;
}

/// Closed form read off the conjugacy classes of M_2(q).
inline ExactInt m2_closed(std::uint64_t q, std::uint64_t L) {
    const ExactInt d1 = d_plain(q, L, 1), d2 = d_plain(q, L, 2);
    const ExactInt Q = q;
    return (d1 + 1) + d1 * (d1 + 1) * (Q * Q + Q) / 2 + d1 * (Q * Q - 1) + d2 * (Q * Q - Q);
}

/// The eight contributions of the M_3(q) class types, in a fixed order. With
/// paper_verbatim the type-5 row uses the literal factor q^2(q^3-1)(q+1)
/// instead of the class size q^2(q^2+q+1).
inline std::vector<ExactInt> m3_contributions(std::uint64_t q, std::uint64_t L, bool paper_verbatim = false) {
    const ExactInt d1 = d_plain(q, L, 1), d2 = d_plain(q, L, 2), d3 = d_plain(q, L, 3);
    const ExactInt Q = q;
    const ExactInt Q2 = Q * Q, Q3 = Q2 * Q;
    const ExactInt binom = (d1 + 1) * d1 * (d1 - 1) / 6;
    const ExactInt type5_size = paper_verbatim ? ExactInt(Q2 * (Q3 - 1) * (Q + 1)) : ExactInt(Q2 * (Q2 + Q + 1));
    return {
        d1 + 1,
        d1 * Q * (Q3 - 1) * (Q2 - 1),
        d1 * (Q3 - 1) * (Q + 1),
        binom * Q3 * (Q + 1) * (Q2 + Q + 1),
        d1 * (d1 + 1) * type5_size,
        d1 * d1 * Q2 * (Q3 - 1) * (Q + 1),
        d3 * Q3 * (Q2 - 1) * (Q - 1),
        (d1 + 1) * d2 * Q3 * (Q3 - 1),
    };
}

inline ExactInt m3_closed(std::uint64_t q, std::uint64_t L, bool paper_verbatim = false) {
    ExactInt s = 0;
    for (const auto& c : m3_contributions(q, L, paper_verbatim)) s += c;
    return s;
}

struct LimitOptions {
    bool normalize = false;       // every L-power factor replaced by 1
    bool paper_verbatim = false;  // Sp/U: 1/(lambda^m m!), no factor 2
};

namespace detail {

inline void check_limit_params(std::uint64_t L, unsigned c) {
    if (!is_prime(L)) throw HypothesisViolation("L = " + std::to_string(L) + " is not prime");
    if (L == 2) throw HypothesisViolation("L = 2 is excluded: the limits are stated for prime L != 2");
    if (c < 1) throw HypothesisViolation("c = v_L(q - 1) must be at least 1");
}

/// prod 1/((scale lambda_i)^{m_i} m_i!) * L^{-m_i val(lambda_i)}.
inline ExactRational partition_weight(const Partition& lam, unsigned scale, const std::function<unsigned(unsigned)>& val, std::uint64_t L,
                                      bool normalize) {
    ExactRational w = 1;
    for (auto [part, m] : lam.multiplicities()) {
        ExactInt den = ipow(ExactInt(scale) * part, m) * factorial(m);
        if (!normalize) den *= ipow(ExactInt(L), std::uint64_t{m} * val(part));
        w /= den;
    }
    return w;
}

}  // namespace detail

/// sum over lambda |- ell of prod 1/(lambda_i^{m_i} m_i!) L^{-m_i (c + v_L(lambda_i))}.
inline ExactRational limit_gl(unsigned ell, std::uint64_t L, unsigned c, const LimitOptions& opt = {}) {
    detail::check_limit_params(L, c);
    ExactRational s = 0;
    for (const auto& lam : partitions(ell))
        s += detail::partition_weight(lam, 1, [&](unsigned k) { return lte_val(L, k, c); }, L, opt.normalize);
    return s;
}

/// Shared Sp/U limit: the plus side carries v_L(q^lambda + 1) = 0, the
/// minus side v_L(q^lambda - 1) = c + v_L(lambda), both with 1/((2 lambda)^m m!).
inline ExactRational limit_sp_u(unsigned ell, std::uint64_t L, unsigned c, const LimitOptions& opt = {}) {
    detail::check_limit_params(L, c);
    const unsigned scale = opt.paper_verbatim ? 1 : 2;
    auto plus_val = [](unsigned) { return 0U; };
    auto minus_val = [&](unsigned k) { return lte_val(L, k, c); };
    ExactRational s = 0;
    for (const auto& sp : split_partitions(ell))
        s += detail::partition_weight(sp.group_plus, scale, plus_val, L, opt.normalize) *
             detail::partition_weight(sp.group_minus, scale, minus_val, L, opt.normalize);
    return s;
}

/// The ell = 3 limit as three terms, one per partition of 3:
/// 1/6 L^{-3c} + 1/3 L^{-v_L(q^3-1)} + 1/2 L^{-c} L^{-v_L(q^2-1)}.
inline ExactRational m3_limit_display(std::uint64_t L, unsigned c) {
    detail::check_limit_params(L, c);
    const ExactInt Lc = ipow(ExactInt(L), c);
    return ExactRational(1, 6 * ipow(Lc, 3)) + ExactRational(1, 3 * ipow(ExactInt(L), lte_val(L, 3, c))) +
           ExactRational(1, 2 * Lc * ipow(ExactInt(L), lte_val(L, 2, c)));
}

/// A matrix of the given type: block diagonal of companion matrices of
/// f^{lambda_k}, with distinct irreducibles f (never t) per block of equal
/// degree and a zero block of size zero_mult. Nullopt if the field has too
/// few irreducibles.
inline std::optional<Matrix> class_representative(const ClassType& ct, const FieldPtr& F) {
    const unsigned n = ct.n();
    Matrix A(F, n);
    std::map<unsigned, std::vector<Poly>> pool;
    std::map<unsigned, std::size_t> used;
    unsigned at = ct.zero_mult;
    for (const auto& b : ct.blocks) {
        if (!pool.count(b.degree)) {
            auto all = enumerate_monic_irreducibles(F, b.degree);
            std::vector<Poly> keep;
            for (auto& f : all)
                if (!(f.degree() == 1 && f.coeff(0) == 0)) keep.push_back(f);
            pool.emplace(b.degree, std::move(keep));
        }
        auto& avail = pool[b.degree];
        if (used[b.degree] >= avail.size()) return std::nullopt;
        const Poly& f = avail[used[b.degree]++];
        for (auto part : b.lambda.parts) {
            Poly g = Poly::monomial(F, 0);
            for (unsigned i = 0; i < part; ++i) g = g * f;
            const auto k = static_cast<unsigned>(g.degree());
            for (unsigned i = 0; i < k; ++i) {
                if (i + 1 < k) A(at + i + 1, at + i) = F->one();
                A(at + i, at + k - 1) = F->neg(g.coeff(i));
            }
            at += k;
        }
    }
    return A;
}

/// Centralizer of A in GL_n(q), counted by scanning all matrices.
inline std::uint64_t brute_centralizer_order(const Matrix& A, std::uint64_t guard = std::uint64_t{1} << 22) {
    const std::uint64_t total = detail::checked_power(A.field().order(), A.dim() * A.dim(), guard);
    std::uint64_t count = 0;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        const Matrix X = Matrix::from_index(A.owner(), A.dim(), idx);
        if (X * A == A * X && X.det() != 0) ++count;
    }
    return count;
}

}  // namespace ffdyn

#endif
