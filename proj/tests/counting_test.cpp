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

#include <gtest/gtest.h>

#include <ffdyn/counting.hpp>

using namespace ffdyn;

TEST(Valuation, Basics) {
    EXPECT_EQ(v_adic(3, 48), 1u);
    EXPECT_EQ(v_adic(2, 58), 1u);
    EXPECT_EQ(v_adic(5, 7), 0u);
    EXPECT_EQ(strip_adic(2, 58), 29);
    EXPECT_THROW(v_adic(3, 0), InvalidArgument);
}

TEST(Valuation, LiftingTheExponent) {
    EXPECT_EQ(lte_val(3, 13, 2, 1), 1u);
    EXPECT_EQ(lte_val(3, 13, 3, 1), 2u);
    for (std::uint64_t q : {7, 13, 19, 31, 37, 43, 61, 67, 73})
        for (std::uint64_t k = 1; k <= 12; ++k)
            EXPECT_EQ(lte_val(3, ExactInt(q), k, v_adic(3, q - 1)), v_adic(3, ipow(ExactInt(q), k) - 1)) << q << " " << k;
    EXPECT_EQ(lte_val(5, 1, 4), 4u);
}

TEST(Counting, EValue) {
    EXPECT_EQ(e_value(59, 2, 1), 29);
    EXPECT_EQ(e_value(7, 3, 2), 16);
    EXPECT_EQ(e_value(3, 2, 2), 1);
}

TEST(Counting, Plain) {
    EXPECT_EQ(d_plain(59, 2, 1), 29);
    EXPECT_EQ(d_plain(7, 3, 2), 7);
    EXPECT_EQ(d_plain(3, 2, 2), 0);
}

TEST(Counting, SelfReciprocal) {
    EXPECT_EQ(d_self_reciprocal(7, 3, 1), 3);
    EXPECT_EQ(d_self_reciprocal(7, 3, 3), 56);
    EXPECT_EQ(count_verbatim(CountKind::kSelfReciprocal, 7, 3, 1), 4);
    EXPECT_EQ(oracle_count(CountKind::kSelfReciprocal, 5, 2, 1), 1);
    EXPECT_EQ(count_verbatim(CountKind::kSelfReciprocal, 5, 2, 1), ExactRational(3, 2));
}

TEST(Counting, SelfConjugate) {
    EXPECT_EQ(d_self_conjugate(4, 3, 1), 5);
    EXPECT_EQ(d_self_conjugate(4, 3, 2), 0);
    EXPECT_EQ(count_verbatim(CountKind::kSelfConjugate, 4, 3, 2), 6);
    const ExactInt expect3 = (strip_adic(3, 65) - strip_adic(3, 5)) / 3;
    EXPECT_EQ(d_self_conjugate(4, 3, 3), expect3);
    EXPECT_EQ(oracle_count(CountKind::kSelfConjugate, 4, 3, 3), expect3);
    EXPECT_EQ(oracle_count(CountKind::kSelfConjugate, 4, 3, 2), 0);
}

TEST(Counting, OracleSpotValues) {
    EXPECT_EQ(oracle_count(CountKind::kPlain, 7, 3, 2), 7);
    EXPECT_EQ(oracle_count(CountKind::kSelfReciprocal, 7, 3, 1), 3);
    for (std::uint64_t q : {3, 4, 5, 7, 8, 9, 11, 13, 16})
        for (std::uint64_t L : {2, 3, 5})
            if (q % L != 0) { EXPECT_EQ(oracle_count(CountKind::kPlain, q, L, 1), e_value(q, L, 1)) << q << " " << L; }
}

TEST(Counting, FormulaEqualsOracleSmallGrid) {
    for (std::uint64_t q : {3, 4, 5, 7, 9, 13})
        for (std::uint64_t L : {2, 3}) {
            if (q % L == 0 || (q - 1) % L != 0) continue;
            for (unsigned n = 1; n <= 3; ++n) {
                EXPECT_EQ(d_plain(q, L, n), oracle_count(CountKind::kPlain, q, L, n)) << q << " " << L << " " << n;
                if (L == 2) continue;
                if (q % 2) { EXPECT_EQ(d_self_reciprocal(q, L, n), oracle_count(CountKind::kSelfReciprocal, q, L, n)) << q << " " << n; }
                EXPECT_EQ(d_self_conjugate(q, L, n), oracle_count(CountKind::kSelfConjugate, q, L, n)) << q << " " << n;
            }
        }
}

TEST(Counting, ParallelOracleIsDeterministic) {
    const auto a = oracle_count(CountKind::kPlain, 13, 3, 3, kDefaultPolyGuard, ParallelContext{1});
    const auto b = oracle_count(CountKind::kPlain, 13, 3, 3, kDefaultPolyGuard, ParallelContext{4});
    EXPECT_EQ(a, b);
}

TEST(Counting, Hypotheses) {
    EXPECT_THROW(d_plain(4, 2, 1), HypothesisViolation);
    EXPECT_THROW(d_plain(6, 5, 1), HypothesisViolation);
    EXPECT_THROW(d_plain(7, 4, 1), HypothesisViolation);
    EXPECT_THROW(d_plain(7, 5, 1), HypothesisViolation);
    EXPECT_THROW(d_self_reciprocal(7, 2, 1), HypothesisViolation);
    EXPECT_THROW(d_self_reciprocal(4, 3, 1), HypothesisViolation);
    EXPECT_THROW(oracle_count(CountKind::kPlain, 3, 3, 1), HypothesisViolation);
    EXPECT_THROW(oracle_count(CountKind::kPlain, 49, 3, 4, 1000), GuardExceeded);
}
