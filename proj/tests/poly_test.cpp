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

#include <ffdyn/poly.hpp>

using namespace ffdyn;

TEST(Poly, Irreducibility) {
    EXPECT_TRUE(is_irreducible(Poly::from_ints(make_field(2, 1), {1, 1, 1})));
    EXPECT_TRUE(is_irreducible(Poly::from_ints(make_field(59, 1), {-42, -31, 1})));
    EXPECT_FALSE(is_irreducible(Poly::from_ints(make_field(7, 1), {-1, 0, 1})));
    EXPECT_FALSE(is_irreducible(Poly::from_ints(make_field(7, 1), {1, 1, 1})));
    EXPECT_THROW(is_irreducible(Poly::from_ints(make_field(7, 1), {3})), InvalidArgument);
}

TEST(Poly, EnumerationMatchesNecklaceCount) {
    auto F2 = make_field(2, 1);
    const auto two = enumerate_monic_irreducibles(F2, 2);
    ASSERT_EQ(two.size(), 1u);
    EXPECT_EQ(two[0].coeffs(), (Coeffs{1, 1, 1}));
    EXPECT_EQ(enumerate_monic_irreducibles(make_field(3, 1), 2).size(), 3u);
    EXPECT_EQ(enumerate_monic_irreducibles(make_field(7, 1), 3).size(), 112u);
    // (q^4 - q^2) / 4 over F_4 and (q^2 - q) / 2 over F_9.
    EXPECT_EQ(enumerate_monic_irreducibles(make_field(2, 2), 4).size(), 60u);
    EXPECT_EQ(enumerate_monic_irreducibles(make_field(3, 2), 2).size(), 36u);
}

TEST(Poly, EnumerationGuard) { EXPECT_THROW(enumerate_monic_irreducibles(make_field(7, 1), 3, 100), GuardExceeded); }

TEST(Poly, ReciprocalTransform) {
    auto F7 = make_field(7, 1);
    const auto f = Poly::from_ints(F7, {1, 1, 1});
    EXPECT_EQ(reciprocal_transform(f).coeffs(), f.coeffs());
    const auto g = Poly::from_ints(F7, {-1, 1});
    EXPECT_EQ(reciprocal_transform(g).coeffs(), g.coeffs());
    EXPECT_EQ(reciprocal_transform(Poly::from_ints(F7, {2, 3, 1})).coeffs(), Poly::from_ints(F7, {4, 5, 1}).coeffs());
    EXPECT_THROW(reciprocal_transform(Poly::from_ints(F7, {0, 1})), InvalidArgument);
}

TEST(Poly, ConjugateTransformExhaustiveF9) {
    auto F9 = make_quadratic_extension(3, 1);
    EXPECT_EQ(conjugate_transform(Poly::from_ints(F9, {-1, 1})).coeffs(), Poly::from_ints(F9, {-1, 1}).coeffs());
    for (std::uint64_t i = 1; i < 9; ++i) {
        const Elem a = F9->from_index(i);
        const Poly f{F9, {F9->neg(a), 1}};
        const bool unitary = F9->pow(a, std::uint64_t{4}) == F9->one();
        EXPECT_EQ(conjugate_transform(f).coeffs() == f.coeffs(), unitary) << F9->to_string(a);
    }
}

TEST(Poly, RootsSatisfyPower) {
    EXPECT_TRUE(roots_satisfy_power(Poly::from_ints(make_field(5, 1), {-1, 1}), 7));
    // Over F_7 the cube roots of unity are rational, so t^2 + t + 1 splits.
    EXPECT_THROW(roots_satisfy_power(Poly::from_ints(make_field(7, 1), {1, 1, 1}), 3), InvalidArgument);
    EXPECT_TRUE(roots_satisfy_power(Poly::from_ints(make_field(5, 1), {1, 1, 1}), 3));
    EXPECT_FALSE(roots_satisfy_power(Poly::from_ints(make_field(5, 1), {1, 1, 1}), 2));
    const auto f = Poly::from_ints(make_field(59, 1), {-42, -31, 1});
    EXPECT_FALSE(roots_satisfy_power(f, 29));
    EXPECT_TRUE(roots_satisfy_power(f, 435));
    EXPECT_THROW(roots_satisfy_power(Poly::from_ints(make_field(7, 1), {-1, 0, 1}), 3), InvalidArgument);
}

TEST(Poly, GcdAndArithmetic) {
    auto F7 = make_field(7, 1);
    const auto a = Poly::from_ints(F7, {-1, 0, 1});  // (t-1)(t+1)
    const auto b = Poly::from_ints(F7, {-1, 1});
    EXPECT_EQ(gcd(a, b).coeffs(), b.coeffs());
    EXPECT_EQ(a.eval(1), 0u);
    EXPECT_EQ(a.eval(2), 3u);
}
