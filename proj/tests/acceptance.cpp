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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <thread>
#include <vector>

#include <ffdyn/ffdyn.hpp>

using namespace ffdyn;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
    bool pass = false;
    std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_s(double s) {
    std::ostringstream o;
    o.precision(2);
    o << std::fixed << s << "s";
    return o.str();
}

std::string r(const ExactRational& x) { return to_string(x); }

Verdict c1_counting_grid() {
    const auto t0 = Clock::now();
    std::size_t cases = 0, bad = 0, corrections = 0;
    std::string first_bad;
    auto check = [&](CountKind kind, std::uint64_t q, std::uint64_t L, unsigned n) {
        ++cases;
        const ExactInt f = count_formula(kind, q, L, n);
        const ExactInt o = oracle_count(kind, q, L, n);
        if (f != o) {
            ++bad;
            if (first_bad.empty()) first_bad = std::string(to_string(kind)) + " q=" + std::to_string(q) + " L=" + std::to_string(L) + " n=" + std::to_string(n);
        }
        if (kind != CountKind::kPlain && count_verbatim(kind, q, L, n) != ExactRational(f)) ++corrections;
    };
    for (std::uint64_t q = 2; q <= 49; ++q) {
        auto pp = prime_power(q);
        if (!pp) continue;
        for (std::uint64_t L : {2, 3, 5, 7}) {
            if (L == pp->first || (q - 1) % L != 0) continue;
            for (unsigned n = 1; n <= 4; ++n) check(CountKind::kPlain, q, L, n);
            if (L == 2) continue;
            for (unsigned n = 1; n <= 3; ++n) {
                if (q % 2 == 1) check(CountKind::kSelfReciprocal, q, L, n);
                check(CountKind::kSelfConjugate, q, L, n);
            }
        }
    }
    const double secs = seconds_since(t0);
    std::string d = std::to_string(cases) + " cases, " + std::to_string(bad) + " mismatches, " + std::to_string(corrections) +
                    " cases where the uncorrected form differs from the count, " + fmt_s(secs);
    if (!first_bad.empty()) d += ", first mismatch " + first_bad;
    return {bad == 0 && secs < 120, d};
}

Verdict c2_example_cycle() {
    const auto t0 = Clock::now();
    const Matrix A = Matrix::from_ints(make_field(59, 1), 2, {0, 42, 1, 31});
    const auto o = orbit_report(A, 2);
    const double secs = seconds_since(t0);
    return {o.preperiod == 0 && o.period == 28 && secs < 1,
            "preperiod " + o.preperiod.str() + ", period " + o.period.str() + ", " + fmt_s(secs)};
}

Verdict c3_field_periodicity() {
    const auto t0 = Clock::now();
    std::size_t cases = 0, bad = 0;
    for (std::uint64_t q = 2; q <= 343; ++q) {
        auto pp = prime_power(q);
        if (!pp) continue;
        auto F = make_field(pp->first, pp->second);
        for (std::uint64_t L : {2, 3, 5}) {
            if (L == pp->first) continue;
            ++cases;
            bad += field_periodic_points(*F, L) != field_periodic_points_by_orbit(*F, L);
        }
    }
    const double secs = seconds_since(t0);
    return {bad == 0 && secs < 30, std::to_string(cases) + " (q, L) pairs, " + std::to_string(bad) + " set mismatches, " + fmt_s(secs)};
}

Verdict c4_structural_vs_orbit() {
    const auto t0 = Clock::now();
    ParallelContext ctx{std::max(1U, std::thread::hardware_concurrency())};
    std::size_t spaces = 0;
    ExactInt scanned = 0, bad = 0;
    for (auto [q, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 2}, {5, 2}, {7, 2}, {3, 3}}) {
        auto F = make_field_of_order(q);
        const std::uint64_t total = to_u64(ipow(ExactInt(q), n * n));
        for (std::uint64_t L : {2, 3, 5}) {
            if (q % L == 0) continue;
            ++spaces;
            scanned += total;
            bad += parallel_sum<ExactInt>(ctx, total, [&](std::uint64_t b, std::uint64_t e) {
                PeriodicityContext pc(F, L, true);
                ExactInt d = 0;
                for (std::uint64_t i = b; i < e; ++i) {
                    const Matrix A = Matrix::from_index(F, n, i);
                    if (pc.periodic(A) != orbit_report(A, L).periodic) ++d;
                }
                return d;
            });
        }
    }
    const double secs = seconds_since(t0);
    return {bad == 0 && secs < 300, std::to_string(spaces) + " (space, L) pairs, " + scanned.str() + " matrices, " + bad.str() + " disagreements, " + fmt_s(secs)};
}

Verdict c5_exact_counts() {
    const auto t0 = Clock::now();
    std::size_t brute_cases = 0, closed_cases = 0, bad = 0;
    std::string first_bad;
    auto note = [&](bool ok, const std::string& what) {
        if (!ok) {
            ++bad;
            if (first_bad.empty()) first_bad = what;
        }
    };
    for (auto [q, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 2}, {5, 2}, {7, 2}, {9, 2}, {11, 2}, {3, 3}, {5, 3}})
        for (std::uint64_t L : {2, 3, 5, 7}) {
            if (q % L == 0 || (q - 1) % L != 0) continue;
            for (Family fam : {Family::kM, Family::kGL}) {
                ++brute_cases;
                const auto k = GroupKind::make(fam, n, q);
                note(exact_periodic_count(fam, n, q, L) == brute_periodic_count(k, L), k.name() + " L=" + std::to_string(L));
            }
        }
    for (std::uint64_t q : {3, 5, 7, 9, 11, 13, 59})
        for (std::uint64_t L : {2, 3, 5}) {
            if (q % L == 0 || (q - 1) % L != 0) continue;
            ++closed_cases;
            note(m2_closed(q, L) == exact_periodic_count(Family::kM, 2, q, L), "m2_closed q=" + std::to_string(q));
            if (q == 59) continue;
            ++closed_cases;
            note(m3_closed(q, L) == exact_periodic_count(Family::kM, 3, q, L), "m3_closed q=" + std::to_string(q));
        }
    std::string d = std::to_string(brute_cases) + " exact-vs-brute cases, " + std::to_string(closed_cases) + " closed-form cases, " +
                    std::to_string(bad) + " mismatches, " + fmt_s(seconds_since(t0));
    if (!first_bad.empty()) d += ", first mismatch " + first_bad;
    return {bad == 0, d};
}

Verdict c6_centralizers() {
    const auto t0 = Clock::now();
    std::size_t types = 0, bad = 0;
    for (auto [q, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 2}, {2, 3}, {3, 3}}) {
        auto F = make_field_of_order(q);
        for (const auto& ct : class_types(n, false)) {
            auto A = class_representative(ct, F);
            if (!A) continue;
            ++types;
            bad += ExactInt(brute_centralizer_order(*A)) != gl_centralizer_order(ct, q);
        }
    }
    const double secs = seconds_since(t0);
    return {bad == 0 && types > 0 && secs < 60, std::to_string(types) + " realizable class types, " + std::to_string(bad) + " mismatches, " + fmt_s(secs)};
}

Verdict c7_gl_limit() {
    const ExactRational lim2 = limit_gl(2, 3, 1), lim3 = limit_gl(3, 3, 1), display = m3_limit_display(3, 1);
    const ExactRational literal = ExactRational(1, 6) * ExactRational(1, 27) + ExactRational(1, 3) * ExactRational(1, 9) + ExactRational(1, 2) * ExactRational(1, 27);
    bool ok = lim2 == ExactRational(2, 9) && lim3 == display;

    std::string gl_trail, m_trail, gl3_trail;
    ExactRational prev_gl = -1, prev_m = -1, gl_gap, m_gap;
    bool gl_nonincreasing = true, m_strict = true, gl3_ok = true;
    for (std::uint64_t q : {13, 31, 67}) {
        if (v_adic(3, q - 1) != 1) ok = false;
        const ExactRational gl = ExactRational(exact_periodic_count(Family::kGL, 2, q, 3), gl_order(2, q));
        const ExactRational m = ExactRational(exact_periodic_count(Family::kM, 2, q, 3), ipow(ExactInt(q), 4));
        const ExactRational gl3 = ExactRational(exact_periodic_count(Family::kGL, 3, q, 3), gl_order(3, q));
        gl_gap = abs(gl - lim2);
        m_gap = abs(m - lim2);
        if (prev_gl >= 0 && gl_gap > prev_gl) gl_nonincreasing = false;
        if (prev_m >= 0 && !(m_gap < prev_m)) m_strict = false;
        prev_gl = gl_gap;
        prev_m = m_gap;
        gl3_ok = gl3_ok && abs(gl3 - lim3) < ExactRational(1, 10);
        gl_trail += (gl_trail.empty() ? "" : ", ") + r(gl);
        m_trail += (m_trail.empty() ? "" : ", ") + r(m);
        gl3_trail += (gl3_trail.empty() ? "" : ", ") + r(gl3);
    }
    ok = ok && gl_nonincreasing && gl_gap < ExactRational(1, 10) && m_strict && gl3_ok;
    std::string d = "limit_gl(2,3,1) = " + r(lim2) + ", limit_gl(3,3,1) = " + r(lim3) + " = three-term display " + r(display) +
                    " (literal 1/2*1/27 last term gives " + r(literal) + "); GL_2 ratio at q = 13, 31, 67: " + gl_trail +
                    " (gap " + r(gl_gap) + ", exact at every q); M_2 ratio strictly monotone toward 2/9: " + m_trail + "; GL_3 ratio: " + gl3_trail;
    return {ok, d};
}

Verdict c8_sp_u_limit() {
    const ExactRational lim = limit_sp_u(1, 3, 1);
    bool ok = lim == ExactRational(2, 3);
    std::string trail;
    ExactRational prev = -1, gap;
    for (std::uint64_t q : {13, 31, 67}) {
        const auto k = GroupKind::make(Family::kSp, 2, q);
        const ExactRational ratio(brute_periodic_count(k, 3), group_order(k));
        gap = abs(ratio - lim);
        if (prev >= 0 && gap > prev) ok = false;
        prev = gap;
        trail += (trail.empty() ? "" : ", ") + r(ratio);
    }
    ok = ok && gap < ExactRational(1, 8);
    const auto u = GroupKind::make(Family::kU, 2, 7);
    const ExactRational u_ratio(brute_periodic_count(u, 3), group_order(u));
    ok = ok && abs(u_ratio - lim) < ExactRational(1, 8);
    bool norm = true;
    for (unsigned ell = 1; ell <= 6; ++ell) norm = norm && limit_sp_u(ell, 3, 1, {true, false}) == 1;
    ok = ok && norm;
    return {ok, "limit_sp_u(1,3,1) = " + r(lim) + " for sp and u; Sp_2 ratio at q = 13, 31, 67: " + trail + " (final gap " + r(gap) +
                    "); U_2(7) ratio " + r(u_ratio) + "; normalization to 1 for ell <= 6: " + (norm ? "yes" : "no")};
}

Verdict c9_regular_semisimple() {
    bool ok = true;
    std::string d;
    for (std::uint64_t q : {13, 31, 67}) {
        const ExactInt order = gl_order(2, q);
        const ExactRational full(exact_periodic_count(Family::kGL, 2, q, 3), order);
        const ExactRational rs(exact_periodic_count(Family::kGL, 2, q, 3, ClassFilter::kRegularSemisimple), order);
        const ExactRational diff = abs(full - rs);
        ok = ok && diff < ExactRational(10, q);
        d += (d.empty() ? "" : "; ") + std::string("q = ") + std::to_string(q) + ": |" + r(full) + " - " + r(rs) + "| = " + r(diff) + " < 10/" + std::to_string(q);
    }
    return {ok, d};
}

std::pair<int, std::string> capture(const std::string& cmd) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, out};
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Verdict c10_determinism() {
    const std::string base = std::string(FFDYN_CLI_PATH) + " verify --suite all --jobs ";
    const auto a = capture(base + "1");
    const auto b = capture(base + "8");
    const bool same = a.second == b.second;
    return {a.first == 0 && b.first == 0 && same && !a.second.empty(),
            std::to_string(a.second.size()) + " bytes with --jobs 1, " + std::to_string(b.second.size()) + " bytes with --jobs 8, " +
                (same ? "byte-identical" : "different") + ", exit codes " + std::to_string(a.first) + " and " + std::to_string(b.first)};
}

}  // namespace

int main() {
    const std::vector<std::function<Verdict()>> criteria{c1_counting_grid, c2_example_cycle, c3_field_periodicity, c4_structural_vs_orbit, c5_exact_counts,
                                                         c6_centralizers,  c7_gl_limit,      c8_sp_u_limit,        c9_regular_semisimple,  c10_determinism};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            v = criteria[i]();
        } catch (const std::exception& e) {
            v = {false, std::string("error: ") + e.what()};
        }
        failed += !v.pass;
        std::cout << "criterion " << i + 1 << ": " << (v.pass ? "PASS" : "FAIL") << "  " << v.detail << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
