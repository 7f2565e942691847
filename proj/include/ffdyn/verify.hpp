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

// Formula-versus-oracle suites. Each check records its parameters, the
// expected and obtained values as strings, and a verdict. The order of
// checks and their contents never depend on the number of workers.
//
// The budget caps the enumeration size of a single check (polynomials,
// matrices or group elements scanned). Checks above it are skipped and
// reported as such.

#ifndef FFDYN_VERIFY_HPP
#define FFDYN_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "classcount.hpp"
#include "counting.hpp"
#include "dynamics.hpp"
#include "exact.hpp"
#include "ff.hpp"
#include "groups.hpp"
#include "parallel.hpp"

namespace ffdyn {

struct Check {
    std::string suite;
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    std::string expected;
    std::string got;
    bool passed = false;
    bool skipped = false;
};

struct VerifyReport {
    std::vector<Check> checks;

    std::size_t passed() const { return count([](const Check& c) { return c.passed && !c.skipped; }); }
    std::size_t failed() const { return count([](const Check& c) { return !c.passed && !c.skipped; }); }
    std::size_t skipped() const { return count([](const Check& c) { return c.skipped; }); }
    bool ok() const { return failed() == 0; }

   private:
    template <class P>
    std::size_t count(P pred) const {
        std::size_t n = 0;
        for (const auto& c : checks) n += pred(c);
        return n;
    }
};

inline constexpr std::uint64_t kDefaultVerifyBudget = std::uint64_t{1} << 22;

inline const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> s{"lemmas", "dynamics", "classes", "limits"};
    return s;
}

namespace detail {

using Params = std::vector<std::pair<std::string, std::string>>;

class Recorder {
   public:
    Recorder(VerifyReport& r, std::string suite, std::uint64_t budget) : r_(r), suite_(std::move(suite)), budget_(budget) {}

    std::uint64_t budget() const { return budget_; }

    void equal(const std::string& name, Params params, const std::string& expected, const std::string& got) {
        r_.checks.push_back({suite_, name, std::move(params), expected, got, expected == got, false});
    }

    void truth(const std::string& name, Params params, const std::string& expected, const std::string& got, bool ok) {
        r_.checks.push_back({suite_, name, std::move(params), expected, got, ok, false});
    }

    void skip(const std::string& name, Params params, std::uint64_t size) {
        r_.checks.push_back({suite_, name, std::move(params), "", "skipped: enumeration size " + std::to_string(size) + " exceeds budget", true, true});
    }

    /// Runs fn unless size exceeds the budget. Errors become failed checks.
    void guarded(const std::string& name, Params params, std::uint64_t size, const std::function<void(Params)>& fn) {
        if (size > budget_) {
            skip(name, std::move(params), size);
            return;
        }
        try {
            fn(params);
        } catch (const std::exception& e) {
            r_.checks.push_back({suite_, name, std::move(params), "no error", std::string("error: ") + e.what(), false, false});
        }
    }

   private:
    VerifyReport& r_;
    std::string suite_;
    std::uint64_t budget_;
};

inline std::string s(const ExactInt& x) { return x.str(); }
inline std::string s(const ExactRational& x) { return to_string(x); }
inline std::string s(std::uint64_t x) { return std::to_string(x); }

inline std::uint64_t saturating_power(std::uint64_t q, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
        r *= q;
    }
    return r;
}

inline void suite_lemmas(Recorder& rec, const ParallelContext& ctx) {
    // Lifting the exponent against direct valuations.
    for (std::uint64_t L : {3, 5, 7})
        for (std::uint64_t q = 2; q <= 200; ++q) {
            auto pp = prime_power(q);
            if (!pp || (q - 1) % L != 0 || pp->first == L) continue;
            const unsigned c = v_adic(L, q - 1);
            for (std::uint64_t k = 1; k <= 9; ++k) {
                const ExactInt direct = v_adic(L, ipow(ExactInt(q), k) - 1);
                rec.equal("lte_val", {{"L", s(L)}, {"q", s(q)}, {"k", s(k)}, {"c", s(c)}}, s(direct), s(ExactInt(lte_val(L, ExactInt(q), k, c))));
            }
        }
    // Formula against oracle over the grid q <= 25.
    for (std::uint64_t q = 2; q <= 25; ++q) {
        auto pp = prime_power(q);
        if (!pp) continue;
        for (std::uint64_t L : {2, 3, 5, 7}) {
            if (L == pp->first || (q - 1) % L != 0) continue;
            for (unsigned n = 1; n <= 3; ++n) {
                Params p{{"kind", "plain"}, {"q", s(q)}, {"L", s(L)}, {"n", s(std::uint64_t{n})}};
                rec.guarded("d_plain=oracle", p, oracle_size(CountKind::kPlain, q, n), [&](Params p2) {
                    rec.equal("d_plain=oracle", p2, s(d_plain(q, L, n)), s(oracle_count(CountKind::kPlain, q, L, n, kDefaultPolyGuard, ctx)));
                });
            }
            rec.equal("d_plain(q,L,1)=e_1", {{"q", s(q)}, {"L", s(L)}}, s(e_value(q, L, 1)), s(d_plain(q, L, 1)));
            if (L == 2) continue;
            for (unsigned n = 1; n <= 3; ++n) {
                if (q % 2 == 1) {
                    Params p{{"kind", "self-reciprocal"}, {"q", s(q)}, {"L", s(L)}, {"n", s(std::uint64_t{n})}};
                    rec.guarded("d_self_reciprocal=oracle", p, oracle_size(CountKind::kSelfReciprocal, q, n), [&](Params p2) {
                        rec.equal("d_self_reciprocal=oracle", p2, s(d_self_reciprocal(q, L, n)),
                                  s(oracle_count(CountKind::kSelfReciprocal, q, L, n, kDefaultPolyGuard, ctx)));
                    });
                }
                Params p{{"kind", "self-conjugate"}, {"q", s(q)}, {"L", s(L)}, {"n", s(std::uint64_t{n})}};
                rec.guarded("d_self_conjugate=oracle", p, oracle_size(CountKind::kSelfConjugate, q, n), [&](Params p2) {
                    rec.equal("d_self_conjugate=oracle", p2, s(d_self_conjugate(q, L, n)),
                              s(oracle_count(CountKind::kSelfConjugate, q, L, n, kDefaultPolyGuard, ctx)));
                });
            }
        }
    }
    // Uncorrected forms at points where they differ from the counts.
    rec.equal("verbatim_self_reciprocal", {{"q", "7"}, {"L", "3"}, {"n", "1"}}, "4/1", s(count_verbatim(CountKind::kSelfReciprocal, 7, 3, 1)));
    rec.equal("verbatim_self_reciprocal", {{"q", "5"}, {"L", "2"}, {"n", "1"}}, "3/2", s(count_verbatim(CountKind::kSelfReciprocal, 5, 2, 1)));
    rec.equal("oracle_self_reciprocal_L2", {{"q", "5"}, {"L", "2"}, {"n", "1"}}, "1", s(oracle_count(CountKind::kSelfReciprocal, 5, 2, 1)));
    rec.equal("verbatim_self_conjugate", {{"q", "4"}, {"L", "3"}, {"n", "2"}}, "6/1", s(count_verbatim(CountKind::kSelfConjugate, 4, 3, 2)));
}

inline void suite_dynamics(Recorder& rec, const ParallelContext& ctx) {
    {
        auto F = make_field(59, 1);
        const Matrix A = Matrix::from_ints(F, 2, {0, 42, 1, 31});
        const auto r = orbit_report(A, 2);
        rec.equal("example_28_cycle", {{"q", "59"}, {"L", "2"}}, "preperiod=0 period=28", "preperiod=" + s(r.preperiod) + " period=" + s(r.period));
        rec.equal("example_structural", {{"q", "59"}, {"L", "2"}}, "true", is_periodic_structural(A, 2) ? "true" : "false");
    }
    for (std::uint64_t q = 2; q <= 64; ++q) {
        auto pp = prime_power(q);
        if (!pp) continue;
        auto F = make_field(pp->first, pp->second);
        for (std::uint64_t L : {2, 3, 5}) {
            if (L == pp->first) continue;
            const auto a = field_periodic_points(*F, L);
            const auto b = field_periodic_points_by_orbit(*F, L);
            rec.truth("field_periodic_points", {{"q", s(q)}, {"L", s(L)}}, s(b.size()) + " points",
                      s(a.size()) + " points" + (a == b ? "" : " (sets differ)"), a == b && ExactInt(a.size()) == field_periodic_count(*F, L));
        }
    }
    const std::vector<std::pair<std::uint64_t, unsigned>> spaces{{3, 2}, {5, 2}, {3, 3}};
    for (auto [q, n] : spaces) {
        auto F = make_field_of_order(q);
        for (std::uint64_t L : {2, 3, 5, 7}) {
            if (q % L == 0) continue;
            const std::uint64_t total = saturating_power(q, n * n);
            Params p{{"q", s(q)}, {"n", s(std::uint64_t{n})}, {"L", s(L)}};
            rec.guarded("structural=orbit", p, total, [&](Params p2) {
                const ExactInt bad = parallel_sum<ExactInt>(ctx, total, [&](std::uint64_t b, std::uint64_t e) {
                    PeriodicityContext pc(F, L, true);
                    std::uint64_t d = 0;
                    for (std::uint64_t i = b; i < e; ++i) {
                        const Matrix A = Matrix::from_index(F, n, i);
                        d += pc.periodic(A) != orbit_report(A, L).periodic;
                    }
                    return ExactInt(d);
                });
                rec.equal("structural=orbit", p2, "0 disagreements", s(bad) + " disagreements");
            });
        }
    }
    {
        auto F = make_field(3, 1);
        const Matrix J = Matrix::jordan_block(F, 1, 2);
        rec.equal("jordan_unipotent_periodic", {{"q", "3"}, {"L", "2"}}, "true", orbit_report(J, 2).periodic ? "true" : "false");
        const Matrix N = Matrix::jordan_block(F, 0, 2);
        rec.equal("nilpotent_block_not_periodic", {{"q", "3"}, {"L", "2"}}, "false", is_periodic_structural(N, 2) ? "true" : "false");
    }
}

inline void suite_classes(Recorder& rec, const ParallelContext& ctx) {
    BruteOptions bo;
    bo.ctx = ctx;
    const std::vector<std::pair<std::uint64_t, unsigned>> cases{{3, 2}, {5, 2}, {7, 2}, {9, 2}, {11, 2}, {3, 3}, {5, 3}};
    for (auto [q, n] : cases)
        for (std::uint64_t L : {2, 3, 5, 7}) {
            if (q % L == 0 || (q - 1) % L != 0) continue;
            for (Family fam : {Family::kM, Family::kGL}) {
                Params p{{"family", to_string(fam)}, {"n", s(std::uint64_t{n})}, {"q", s(q)}, {"L", s(L)}};
                rec.guarded("exact=brute", p, saturating_power(q, n * n), [&](Params p2) {
                    rec.equal("exact=brute", p2, s(brute_periodic_count(GroupKind::make(fam, n, q), L, bo)), s(exact_periodic_count(fam, n, q, L)));
                });
            }
        }
    for (std::uint64_t q : {3, 5, 7, 9, 11, 13, 59})
        for (std::uint64_t L : {2, 3, 5}) {
            if (q % L == 0 || (q - 1) % L != 0) continue;
            rec.equal("m2_closed=exact", {{"q", s(q)}, {"L", s(L)}}, s(exact_periodic_count(Family::kM, 2, q, L)), s(m2_closed(q, L)));
        }
    for (std::uint64_t q : {3, 5, 7, 13})
        for (std::uint64_t L : {2, 3}) {
            if (q % L == 0 || (q - 1) % L != 0) continue;
            rec.equal("m3_closed=exact", {{"q", s(q)}, {"L", s(L)}}, s(exact_periodic_count(Family::kM, 3, q, L)), s(m3_closed(q, L)));
        }
    for (auto [q, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 2}, {2, 3}, {3, 3}}) {
        auto F = make_field_of_order(q);
        for (const auto& ct : class_types(n, false)) {
            auto A = class_representative(ct, F);
            if (!A) continue;
            Params p{{"q", s(q)}, {"n", s(std::uint64_t{n})}, {"type", ct.to_string()}};
            rec.guarded("centralizer", p, saturating_power(q, n * n), [&](Params p2) {
                rec.equal("centralizer", p2, s(std::uint64_t{brute_centralizer_order(*A)}), s(gl_centralizer_order(ct, q)));
            });
        }
    }
    for (auto [fam, n, q] : std::vector<std::tuple<Family, unsigned, std::uint64_t>>{{Family::kGL, 2, 3}, {Family::kSp, 2, 5}, {Family::kU, 2, 3}, {Family::kSp, 4, 3}, {Family::kU, 3, 3}}) {
        const auto k = GroupKind::make(fam, n, q);
        const std::uint64_t size = group_order(k).convert_to<std::uint64_t>();
        rec.guarded("enumeration=order", {{"group", k.name()}}, size, [&](Params p2) {
            EnumerationOptions eo;
            eo.use_cache = false;
            rec.equal("enumeration=order", p2, group_order(k).str(), s(std::uint64_t{enumerate_group(k, eo).size()}));
        });
    }
}

inline void suite_limits(Recorder& rec, const ParallelContext& ctx) {
    for (unsigned ell = 1; ell <= 8; ++ell)
        rec.equal("limit_gl_normalized", {{"ell", s(std::uint64_t{ell})}}, "1/1", s(limit_gl(ell, 3, 1, {true, false})));
    for (unsigned ell = 1; ell <= 6; ++ell)
        rec.equal("limit_sp_u_normalized", {{"ell", s(std::uint64_t{ell})}}, "1/1", s(limit_sp_u(ell, 3, 1, {true, false})));
    rec.equal("limit_gl", {{"ell", "2"}, {"L", "3"}, {"c", "1"}}, "2/9", s(limit_gl(2, 3, 1)));
    rec.equal("limit_gl=m3_display", {{"ell", "3"}, {"L", "3"}, {"c", "1"}}, s(m3_limit_display(3, 1)), s(limit_gl(3, 3, 1)));
    rec.equal("limit_sp_u", {{"ell", "1"}, {"L", "3"}, {"c", "1"}}, "2/3", s(limit_sp_u(1, 3, 1)));
    for (std::uint64_t L : {3, 5, 7})
        for (unsigned c = 1; c <= 3; ++c) rec.equal("limit_gl(1)", {{"L", s(L)}, {"c", s(std::uint64_t{c})}}, s(ExactRational(1, ipow(ExactInt(L), c))), s(limit_gl(1, L, c)));

    const ExactRational lim2 = limit_gl(2, 3, 1);
    ExactRational prev_gap = -1;
    bool monotone = true;
    std::string trail;
    for (std::uint64_t q : {13, 31, 67}) {
        const ExactRational m = ExactRational(exact_periodic_count(Family::kM, 2, q, 3), ipow(ExactInt(q), 4));
        const ExactRational gl = ExactRational(exact_periodic_count(Family::kGL, 2, q, 3), gl_order(2, q));
        const ExactRational rs = ExactRational(exact_periodic_count(Family::kGL, 2, q, 3, ClassFilter::kRegularSemisimple), gl_order(2, q));
        const ExactRational gap = abs(m - lim2);
        if (prev_gap >= 0 && !(gap < prev_gap)) monotone = false;
        prev_gap = gap;
        trail += (trail.empty() ? "" : " ") + s(m);
        rec.truth("gl_ratio_gap", {{"q", s(q)}, {"ell", "2"}, {"L", "3"}}, "|ratio - 2/9| < 1/10", s(gl), abs(gl - lim2) < ExactRational(1, 10));
        const ExactRational diff = abs(rs - gl);
        rec.truth("regular_semisimple_dominance", {{"q", s(q)}, {"ell", "2"}, {"L", "3"}}, "< " + s(ExactRational(10, q)), s(diff), diff < ExactRational(10, q));
    }
    rec.truth("m_ratio_strictly_monotone", {{"ell", "2"}, {"L", "3"}, {"q", "13,31,67"}}, "gaps strictly decreasing", trail, monotone);

    BruteOptions bo;
    bo.ctx = ctx;
    ExactRational sp_prev = -1;
    bool sp_ok = true;
    std::string sp_trail;
    for (std::uint64_t q : {13, 31, 67}) {
        const auto k = GroupKind::make(Family::kSp, 2, q);
        const std::uint64_t size = group_order(k).convert_to<std::uint64_t>();
        rec.guarded("sp2_ratio", {{"q", s(q)}, {"L", "3"}}, size, [&](Params p2) {
            const ExactRational r = ExactRational(brute_periodic_count(k, 3, bo), group_order(k));
            const ExactRational gap = abs(r - limit_sp_u(1, 3, 1));
            if (sp_prev >= 0 && gap > sp_prev) sp_ok = false;
            sp_prev = gap;
            sp_trail += (sp_trail.empty() ? "" : " ") + s(r);
            rec.truth("sp2_ratio", p2, "|ratio - 2/3| < 1/8", s(r), gap < ExactRational(1, 8));
        });
    }
    rec.truth("sp2_gap_non_increasing", {{"L", "3"}, {"q", "13,31,67"}}, "gaps non-increasing", sp_trail, sp_ok);
}

}  // namespace detail

/// Runs one suite, or all of them for "all".
inline VerifyReport run_verify(const std::string& suite, std::uint64_t budget = kDefaultVerifyBudget, const ParallelContext& ctx = {}) {
    VerifyReport report;
    const std::vector<std::string> todo = suite == "all" ? verify_suites() : std::vector<std::string>{suite};
    for (const auto& name : todo) {
        detail::Recorder rec(report, name, budget);
        if (name == "lemmas")
            detail::suite_lemmas(rec, ctx);
        else if (name == "dynamics")
            detail::suite_dynamics(rec, ctx);
        else if (name == "classes")
            detail::suite_classes(rec, ctx);
        else if (name == "limits")
            detail::suite_limits(rec, ctx);
        else
            throw InvalidArgument("unknown suite '" + name + "' (expected lemmas, dynamics, classes, limits or all)");
    }
    return report;
}

}  // namespace ffdyn

#endif
