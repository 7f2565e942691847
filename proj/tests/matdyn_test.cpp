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

#include <ffdyn/dynamics.hpp>
#include <ffdyn/matrix.hpp>

using namespace ffdyn;

namespace {
FieldPtr f59() { return make_field(59, 1); }
}  // namespace

TEST(Matrix, PowerBasics) {
    auto F = f59();
    EXPECT_TRUE(mat_power(Matrix::identity(F, 3), ExactInt("1000000000000000000000")).is_identity());
    auto F5 = make_field(5, 1);
    EXPECT_TRUE(mat_power(Matrix::jordan_block(F5, 1, 2), 5).is_identity());
    const Matrix A = Matrix::from_ints(F, 2, {0, 42, 1, 31});
    EXPECT_EQ(mat_power(A, 2), Matrix::from_ints(F, 2, {42, 4, 31, 0}));
    EXPECT_EQ(mat_power(A, 7), A * A * A * A * A * A * A);
}

TEST(Matrix, InverseAndDet) {
    auto F = make_field(3, 2);
    for (std::uint64_t i = 0; i < 6561; i += 37) {
        const Matrix A = Matrix::from_index(F, 2, i);
        if (A.det() == 0) {
            EXPECT_THROW(A.inverse(), InvalidArgument);
            continue;
        }
        EXPECT_TRUE((A * A.inverse()).is_identity());
    }
}

TEST(Matrix, MinAndCharPoly) {
    auto F7 = make_field(7, 1);
    const Matrix I = Matrix::identity(F7, 2);
    EXPECT_EQ(min_poly(I).coeffs(), Poly::from_ints(F7, {-1, 1}).coeffs());
    EXPECT_EQ(char_poly(I).coeffs(), Poly::from_ints(F7, {1, -2, 1}).coeffs());
    const Matrix A = Matrix::from_ints(f59(), 2, {0, 42, 1, 31});
    EXPECT_EQ(char_poly(A).coeffs(), Poly::from_ints(f59(), {-42, -31, 1}).coeffs());
    EXPECT_EQ(min_poly(A).coeffs(), char_poly(A).coeffs());
    const Matrix D = Matrix::diagonal(F7, {1, 2});
    EXPECT_EQ(min_poly(D).coeffs(), Poly::from_ints(F7, {2, -3, 1}).coeffs());
    EXPECT_EQ(char_poly(D).coeffs(), min_poly(D).coeffs());
}

TEST(Orbit, TwentyEightCycle) {
    const Matrix A = Matrix::from_ints(f59(), 2, {0, 42, 1, 31});
    const auto r = orbit_report(A, 2);
    EXPECT_TRUE(r.periodic);
    EXPECT_EQ(r.preperiod, 0);
    EXPECT_EQ(r.period, 28);
    EXPECT_TRUE(is_periodic_structural(A, 2));
}

TEST(Orbit, IdentityAndNilpotent) {
    auto F = make_field(7, 1);
    for (std::uint64_t L : {2, 3, 5}) {
        const auto r = orbit_report(Matrix::identity(F, 3), L);
        EXPECT_EQ(r.period, 1);
        EXPECT_EQ(r.preperiod, 0);
        const auto n = orbit_report(Matrix::jordan_block(F, 0, 2), L);
        EXPECT_FALSE(n.periodic);
        EXPECT_GE(n.preperiod, 1);
    }
    EXPECT_TRUE(is_periodic_structural(Matrix(F, 2), 3));
    EXPECT_FALSE(is_periodic_structural(Matrix::jordan_block(F, 0, 2), 3));
    EXPECT_THROW(orbit_report(Matrix::identity(F, 2), 1), InvalidArgument);
}

TEST(Orbit, StructuralAgreesOnM2of3) {
    auto F = make_field(3, 1);
    for (std::uint64_t L : {2, 5, 7}) {
        PeriodicityContext pc(F, L, true);
        for (std::uint64_t i = 0; i < 81; ++i) {
            const Matrix A = Matrix::from_index(F, 2, i);
            EXPECT_EQ(pc.periodic(A), orbit_report(A, L).periodic) << A.to_string() << " L=" << L;
        }
    }
}

TEST(Orbit, StructuralHypothesis) {
    auto F = make_field(5, 1);
    EXPECT_THROW(is_periodic_structural(Matrix::identity(F, 2), 3), HypothesisViolation);
    EXPECT_NO_THROW(is_periodic_structural(Matrix::identity(F, 2), 3, true));
}

TEST(FieldDynamics, PeriodicPoints) {
    auto F7 = make_field(7, 1);
    EXPECT_EQ(field_periodic_points(*F7, 3), (std::vector<Elem>{0, 1, 6}));
    EXPECT_EQ(field_periodic_count(*F7, 3), 3);
    EXPECT_EQ(field_periodic_points(*f59(), 2).size(), 30u);
    EXPECT_EQ(field_periodic_points_by_orbit(*F7, 5).size(), 7u);
    EXPECT_EQ(field_periodic_points(*F7, 5).size(), 7u);
    for (std::uint64_t q : {8, 9, 16, 25, 27, 32, 49})
        for (std::uint64_t L : {2, 3, 5}) {
            auto F = make_field_of_order(q);
            if (q % L == 0) continue;
            EXPECT_EQ(field_periodic_points(*F, L), field_periodic_points_by_orbit(*F, L)) << q << " " << L;
        }
}
