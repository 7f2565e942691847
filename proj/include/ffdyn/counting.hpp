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

// L-adic valuations and the three counts of monic irreducibles whose roots
// satisfy alpha^e = 1 with e the L-free part of q^n - 1:
//
//   d_plain            degree n over F_q
//   d_self_reciprocal  self-reciprocal, degree 2n over F_q
//   d_self_conjugate   self-conjugate, degree n over F_{q^2}
//
// Each closed form has an enumeration counterpart in oracle_count().

#ifndef FFDYN_COUNTING_HPP
#define FFDYN_COUNTING_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "errors.hpp"
#include "exact.hpp"
#include "ff.hpp"
#include "parallel.hpp"
#include "poly.hpp"

namespace ffdyn {

/// Largest k with L^k | n.
inline unsigned v_adic(const ExactInt& L, ExactInt n) {
    if (L < 2) throw InvalidArgument("v_adic: base must be at least 2");
    if (n == 0) throw InvalidArgument("v_adic: valuation of zero is undefined");
    if (n < 0) n = -n;
    unsigned k = 0;
    while (n % L == 0) {
        n /= L;
        ++k;
    }
    return k;
}

/// The L-free part of n.
inline ExactInt strip_adic(const ExactInt& L, ExactInt n) {
    while (n % L == 0) n /= L;
    return n;
}

/// v_L(q^k - 1) = c + v_L(k) for odd L with v_L(q - 1) = c >= 1.
inline unsigned lte_val(std::uint64_t L, std::uint64_t k, unsigned c) {
    if (!is_prime(L)) throw InvalidArgument("lte_val: L must be prime");
    if (L == 2) throw HypothesisViolation("lte_val: L = 2 is refused (lifting the exponent needs odd L)");
    if (c < 1) throw HypothesisViolation("lte_val: needs L | q - 1, i.e. c >= 1");
    if (k < 1) throw InvalidArgument("lte_val: k must be positive");
    return c + v_adic(L, k);
}

/// Same, checking c against a concrete q.
inline unsigned lte_val(std::uint64_t L, const ExactInt& q, std::uint64_t k, unsigned c) {
    if (q < 2 || v_adic(L, q - 1) != c)
        throw HypothesisViolation("lte_val: v_L(q - 1) != c for q = " + q.str());
    return lte_val(L, k, c);
}

/// Parameters of a count, validated on construction.
struct CountParams {
    std::uint64_t q = 0;
    std::uint64_t p = 0;
    unsigned d = 0;
    std::uint64_t L = 0;
    unsigned n = 0;
    std::optional<unsigned> c;  // declared v_L(q - 1)

    enum Require : unsigned { kBasic = 0, kLDividesQMinus1 = 1, kOddL = 2, kOddQ = 4 };

    static CountParams make(std::uint64_t q, std::uint64_t L, unsigned n, unsigned require = kBasic) {
        CountParams cp;
        auto pp = prime_power(q);
        if (!pp) throw HypothesisViolation("q = " + std::to_string(q) + " is not a prime power");
        cp.q = q;
        cp.p = pp->first;
        cp.d = pp->second;
        cp.L = L;
        cp.n = n;
        if (n < 1) throw InvalidArgument("degree n must be at least 1");
        if (!is_prime(L)) throw HypothesisViolation("L = " + std::to_string(L) + " is not prime");
        if (L == cp.p) throw HypothesisViolation("gcd(L, q) = 1 fails: L = " + std::to_string(L) + " is the characteristic");
        if ((require & kLDividesQMinus1) && (q - 1) % L != 0)
            throw HypothesisViolation("delta_L(p) | d fails: L = " + std::to_string(L) + " does not divide q - 1 = " + std::to_string(q - 1));
        if ((require & kOddL) && L == 2) throw HypothesisViolation("L must be odd (L = 2 is excluded for this count)");
        if ((require & kOddQ) && q % 2 == 0) throw HypothesisViolation("q must be odd for self-reciprocal counts");
        if ((q - 1) % L == 0) cp.c = v_adic(L, q - 1);
        return cp;
    }
};

/// The L-free part of q^ell - 1.
inline ExactInt e_value(std::uint64_t q, std::uint64_t L, unsigned ell) {
    CountParams::make(q, L, ell);
    return strip_adic(L, ipow(ExactInt(q), ell) - 1);
}

namespace detail {

inline ExactInt checked_quotient(const ExactInt& num, const ExactInt& den, const char* what) {
    if (num % den != 0) throw std::logic_error(std::string(what) + ": closed form is not an integer");
    return num / den;
}

}  // namespace detail

/// Number of monic irreducible f of degree n over F_q whose roots satisfy alpha^{e_n} = 1.
inline ExactInt d_plain(std::uint64_t q, std::uint64_t L, unsigned n) {
    CountParams::make(q, L, n, CountParams::kLDividesQMinus1);
    ExactInt sum = 0;
    for (auto i : divisors(n)) {
        const int mu = mobius(n / i);
        if (mu == 0) continue;
        sum += mu * strip_adic(L, ipow(ExactInt(q), i) - 1);
    }
    return detail::checked_quotient(sum, n, "d_plain");
}

/// Self-reciprocal irreducibles of degree 2n over F_q with roots satisfying
/// alpha^{e_{2n}} = 1. The -2 inside the sum removes the roots +1 and -1,
/// which only changes the total when n is a power of two.
inline ExactInt d_self_reciprocal(std::uint64_t q, std::uint64_t L, unsigned n) {
    CountParams::make(q, L, n, CountParams::kLDividesQMinus1 | CountParams::kOddL | CountParams::kOddQ);
    ExactInt sum = 0;
    for (auto i : divisors(n)) {
        if (i % 2 == 0) continue;
        const int mu = mobius(i);
        if (mu == 0) continue;
        sum += mu * (strip_adic(L, ipow(ExactInt(q), n / i) + 1) - 2);
    }
    return detail::checked_quotient(sum, 2 * ExactInt(n), "d_self_reciprocal");
}

/// Self-conjugate irreducibles of degree n over F_{q^2} with roots satisfying
/// alpha^e = 1, e the L-free part of q^{2n} - 1. Zero for even n: such
/// polynomials only exist in odd degree.
inline ExactInt d_self_conjugate(std::uint64_t q, std::uint64_t L, unsigned n) {
    CountParams::make(q, L, n, CountParams::kLDividesQMinus1 | CountParams::kOddL);
    if (n % 2 == 0) return 0;
    ExactInt sum = 0;
    for (auto i : divisors(n)) {
        const int mu = mobius(i);
        if (mu == 0) continue;
        sum += mu * strip_adic(L, ipow(ExactInt(q), n / i) + 1);
    }
    return detail::checked_quotient(sum, n, "d_self_conjugate");
}

/// The three uncorrected closed forms, kept for comparison
/// only. The plain form carries v_p where v_L is meant, so its L-power
/// is always 1. Results may be non-integral.
namespace verbatim {

inline ExactRational d_plain(std::uint64_t q, std::uint64_t L, unsigned n) {
    auto cp = CountParams::make(q, L, n);
    ExactInt sum = 0;
    for (auto i : divisors(n)) {
        const int mu = mobius(n / i);
        if (mu == 0) continue;
        const ExactInt term = ipow(ExactInt(q), i) - 1;
        sum += mu * term / ipow(ExactInt(L), v_adic(cp.p, term));
    }
    return ExactRational(sum, n);
}

inline ExactRational d_self_reciprocal(std::uint64_t q, std::uint64_t L, unsigned n) {
    CountParams::make(q, L, n);
    ExactInt sum = 0;
    for (auto i : divisors(n)) {
        if (i % 2 == 0) continue;
        const int mu = mobius(i);
        if (mu == 0) continue;
        sum += mu * strip_adic(L, ipow(ExactInt(q), n / i) + 1);
    }
    return ExactRational(sum, 2 * ExactInt(n));
}

inline ExactRational d_self_conjugate(std::uint64_t q, std::uint64_t L, unsigned n) {
    CountParams::make(q, L, n);
    ExactInt sum = 0;
    for (auto i : divisors(n)) {
        const int mu = mobius(i);
        if (mu == 0) continue;
        sum += mu * strip_adic(L, ipow(ExactInt(q), n / i) + 1);
    }
    return ExactRational(sum, n);
}

}  // namespace verbatim

enum class CountKind { kPlain, kSelfReciprocal, kSelfConjugate };

inline const char* to_string(CountKind k) {
    switch (k) {
        case CountKind::kPlain: return "plain";
        case CountKind::kSelfReciprocal: return "self-reciprocal";
        case CountKind::kSelfConjugate: return "self-conjugate";
    }
    return "?";
}

inline ExactInt count_formula(CountKind kind, std::uint64_t q, std::uint64_t L, unsigned n) {
    switch (kind) {
        case CountKind::kPlain: return d_plain(q, L, n);
        case CountKind::kSelfReciprocal: return d_self_reciprocal(q, L, n);
        case CountKind::kSelfConjugate: return d_self_conjugate(q, L, n);
    }
    return 0;
}

inline ExactRational count_verbatim(CountKind kind, std::uint64_t q, std::uint64_t L, unsigned n) {
    switch (kind) {
        case CountKind::kPlain: return verbatim::d_plain(q, L, n);
        case CountKind::kSelfReciprocal: return verbatim::d_self_reciprocal(q, L, n);
        case CountKind::kSelfConjugate: return verbatim::d_self_conjugate(q, L, n);
    }
    return 0;
}

namespace detail {

/// Mixed-radix decoding of idx against radix[], least significant first.
inline void decode_mixed(std::uint64_t idx, const std::vector<std::uint64_t>& radix, std::vector<std::uint64_t>& out) {
    out.resize(radix.size());
    for (std::size_t i = 0; i < radix.size(); ++i) {
        out[i] = idx % radix[i];
        idx /= radix[i];
    }
}

/// Candidate space for self-reciprocal monic f of degree 2n: f(0) = s = +-1,
/// f_{2n-i} = s f_i, and f_n = 0 when s = -1 in odd characteristic.
struct ReciprocalCandidates {
    const FieldSpec& F;
    unsigned n;
    std::vector<Elem> signs;
    std::uint64_t per_free = 0;  // q^{n-1}

    ReciprocalCandidates(const FieldSpec& F_, unsigned n_) : F(F_), n(n_) {
        signs.push_back(F.one());
        if (F.neg(F.one()) != F.one()) signs.push_back(F.neg(F.one()));
        per_free = checked_power(F.order(), n - 1, std::numeric_limits<std::uint64_t>::max());
    }

    std::uint64_t size() const {
        std::uint64_t total = 0;
        for (auto s : signs) total += per_free * (middle_free(s) ? F.order() : 1);
        return total;
    }

    bool middle_free(Elem s) const { return s == F.one(); }

    void decode(std::uint64_t idx, Coeffs& co) const {
        co.assign(2 * n + 1, 0);
        Elem s = signs[0];
        const std::uint64_t first = per_free * (middle_free(signs[0]) ? F.order() : 1);
        if (idx >= first) {
            s = signs[1];
            idx -= first;
        }
        co[0] = s;
        co[2 * n] = F.one();
        const std::uint64_t q = F.order();
        for (unsigned i = 1; i < n; ++i) {
            co[i] = F.from_index(idx % q);
            idx /= q;
            co[2 * n - i] = F.mul(s, co[i]);
        }
        co[n] = middle_free(s) ? F.from_index(idx % q) : 0;
    }
};

/// Candidate space for self-conjugate monic f of degree n over F_{q^2}:
/// f(0) = c with c^{q+1} = 1 and f_{n-i} = c conj(f_i).
struct ConjugateCandidates {
    const FieldSpec& F;
    unsigned n;
    std::vector<Elem> units;                    // c with c^{q+1} = 1
    std::vector<std::vector<Elem>> middle;      // per c: x with x = c conj(x)
    std::vector<std::uint64_t> radix;

    ConjugateCandidates(const FieldSpec& F_, unsigned n_) : F(F_), n(n_) {
        const std::uint64_t Q = F.order();
        for (std::uint64_t i = 1; i < Q; ++i) {
            const Elem x = F.from_index(i);
            if (F.mul(x, F.conj(x)) == F.one()) units.push_back(x);
        }
        if (n % 2 == 0) {
            for (auto c : units) {
                std::vector<Elem> sols;
                for (std::uint64_t i = 0; i < Q; ++i) {
                    const Elem x = F.from_index(i);
                    if (F.mul(c, F.conj(x)) == x) sols.push_back(x);
                }
                middle.push_back(std::move(sols));
            }
        }
        radix.push_back(units.size());
        for (unsigned i = 1; 2 * i < n; ++i) radix.push_back(Q);
        if (n % 2 == 0) radix.push_back(middle.front().size());
    }

    std::uint64_t size() const {
        std::uint64_t total = 1;
        for (auto r : radix) {
            if (total > std::numeric_limits<std::uint64_t>::max() / r) throw GuardExceeded("candidate space too large");
            total *= r;
        }
        return total;
    }

    void decode(std::uint64_t idx, std::vector<std::uint64_t>& dig, Coeffs& co) const {
        decode_mixed(idx, radix, dig);
        co.assign(n + 1, 0);
        const Elem c = units[dig[0]];
        co[0] = c;
        co[n] = F.one();
        unsigned k = 1;
        for (unsigned i = 1; 2 * i < n; ++i, ++k) {
            co[i] = F.from_index(dig[k]);
            co[n - i] = F.mul(c, F.conj(co[i]));
        }
        if (n % 2 == 0) co[n / 2] = middle[dig[0]][dig[k]];
    }
};

}  // namespace detail

/// Number of candidates oracle_count enumerates for these parameters.
inline std::uint64_t oracle_size(CountKind kind, std::uint64_t q, unsigned n) {
    auto pp = prime_power(q);
    if (!pp) throw HypothesisViolation("q = " + std::to_string(q) + " is not a prime power");
    switch (kind) {
        case CountKind::kPlain:
            return detail::checked_power(q, n, std::numeric_limits<std::uint64_t>::max());
        case CountKind::kSelfReciprocal:
            return detail::ReciprocalCandidates(*make_field(pp->first, pp->second), n).size();
        case CountKind::kSelfConjugate:
            return detail::ConjugateCandidates(*make_quadratic_extension(pp->first, pp->second), n).size();
    }
    return 0;
}

/// Brute-force counterpart of count_formula: enumerate the monic polynomials
/// of the right degree fixed by the relevant transform, keep the irreducible
/// ones and test t^e = 1 mod f. Only gcd(L, q) = 1 is required. The guard
/// bounds the number of candidates.
inline ExactInt oracle_count(CountKind kind, std::uint64_t q, std::uint64_t L, unsigned n,
                             std::uint64_t guard = kDefaultPolyGuard, const ParallelContext& ctx = {}) {
    auto cp = CountParams::make(q, L, n);
    if (kind == CountKind::kPlain) {
        auto F = make_field(cp.p, cp.d);
        const auto reducible = detail::reducible_bitmap(*F, n, guard);
        const std::uint64_t e = to_u64(strip_adic(L, ipow(ExactInt(q), n) - 1));
        return parallel_sum<ExactInt>(ctx, reducible.size(), [&](std::uint64_t b, std::uint64_t end) {
            ExactInt count = 0;
            Coeffs co;
            detail::decode_monic(*F, 0, n, co);
            detail::ModRing R(*F, co);
            for (std::uint64_t idx = b; idx < end; ++idx) {
                if (reducible[idx]) continue;
                detail::decode_monic(*F, idx, n, co);
                if (n == 1 && co[0] == 0) continue;  // f = t
                R.set_modulus(co);
                if (R.is_one(R.pow_t(e))) ++count;
            }
            return count;
        });
    }

    if (kind == CountKind::kSelfReciprocal) {
        auto F = make_field(cp.p, cp.d);
        const detail::ReciprocalCandidates cand(*F, n);
        const std::uint64_t total = cand.size();
        if (total > guard) throw GuardExceeded("self-reciprocal candidate count " + std::to_string(total) + " exceeds the enumeration guard");
        const std::uint64_t e = to_u64(strip_adic(L, ipow(ExactInt(q), 2 * n) - 1));
        return parallel_sum<ExactInt>(ctx, total, [&](std::uint64_t b, std::uint64_t end) {
            ExactInt count = 0;
            Coeffs co;
            cand.decode(b, co);
            detail::ModRing R(*F, co);
            for (std::uint64_t idx = b; idx < end; ++idx) {
                cand.decode(idx, co);
                if (!detail::is_irreducible_raw(*F, co)) continue;
                R.set_modulus(co);
                if (R.is_one(R.pow_t(e))) ++count;
            }
            return count;
        });
    }

    auto F = make_quadratic_extension(cp.p, cp.d);
    const detail::ConjugateCandidates cand(*F, n);
    const std::uint64_t total = cand.size();
    if (total > guard) throw GuardExceeded("self-conjugate candidate count " + std::to_string(total) + " exceeds the enumeration guard");
    const ExactInt e = strip_adic(L, ipow(ExactInt(F->order()), n) - 1);
    return parallel_sum<ExactInt>(ctx, total, [&](std::uint64_t b, std::uint64_t end) {
        ExactInt count = 0;
        Coeffs co;
        std::vector<std::uint64_t> dig;
        cand.decode(b, dig, co);
        detail::ModRing R(*F, co);
        for (std::uint64_t idx = b; idx < end; ++idx) {
            cand.decode(idx, dig, co);
            if (!detail::is_irreducible_raw(*F, co)) continue;
            R.set_modulus(co);
            if (R.is_one(R.pow_t(e))) ++count;
        }
        return count;
    });
}

}  // namespace ffdyn

#endif
