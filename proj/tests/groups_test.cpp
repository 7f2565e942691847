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

#include <ffdyn/groups.hpp>

using namespace ffdyn;

namespace {
EnumerationOptions no_cache() {
    EnumerationOptions o;
    o.use_cache = false;
    return o;
}
}  // namespace

TEST(Groups, Orders) {
    EXPECT_EQ(group_order(GroupKind::make(Family::kGL, 2, 3)), 48);
    EXPECT_EQ(group_order(GroupKind::make(Family::kSp, 4, 3)), 51840);
    EXPECT_EQ(group_order(GroupKind::make(Family::kU, 2, 3)), 96);
    EXPECT_EQ(group_order(GroupKind::make(Family::kU, 3, 3)), 24192);
    EXPECT_EQ(group_order(GroupKind::make(Family::kSp, 2, 67)), 300696);
    EXPECT_EQ(group_order(GroupKind::make(Family::kM, 2, 3)), 81);
    EXPECT_THROW(GroupKind::make(Family::kSp, 3, 3), InvalidArgument);
    EXPECT_THROW(GroupKind::make(Family::kGL, 2, 10), InvalidArgument);
}

TEST(Groups, Membership) {
    for (auto fam : {Family::kM, Family::kGL, Family::kSp, Family::kU}) {
        const auto k = GroupKind::make(fam, 2, 5);
        EXPECT_TRUE(is_member(k, Matrix::identity(k.field, 2))) << k.name();
    }
    const auto sp = GroupKind::make(Family::kSp, 2, 3);
    EXPECT_FALSE(is_member(sp, Matrix::diagonal(sp.field, {1, 2})));
    EXPECT_TRUE(is_member(sp, Matrix::from_ints(sp.field, 2, {0, 1, -1, 0})));
    EXPECT_TRUE(is_member(GroupKind::make(Family::kSp, 2, 13), Matrix::from_ints(make_field(13, 1), 2, {0, 1, -1, 0})));
}

TEST(Groups, EnumerationByFilter) {
    EXPECT_EQ(enumerate_group(GroupKind::make(Family::kGL, 2, 3), no_cache()).size(), 48u);
    EXPECT_EQ(enumerate_group(GroupKind::make(Family::kU, 2, 3), no_cache()).size(), 96u);
    EXPECT_EQ(enumerate_group(GroupKind::make(Family::kSp, 2, 5), no_cache()).size(), 120u);
}

TEST(Groups, EnumerationByClosure) {
    const auto k = GroupKind::make(Family::kSp, 4, 3);
    const auto elems = enumerate_group(k, no_cache());
    ASSERT_EQ(elems.size(), 51840u);
    for (std::size_t i = 0; i < elems.size(); i += 997) EXPECT_TRUE(is_member(k, elems[i]));
}

TEST(Groups, PowerMapStaysInside) {
    for (auto k : {GroupKind::make(Family::kSp, 2, 5), GroupKind::make(Family::kU, 2, 3), GroupKind::make(Family::kGL, 2, 3)})
        for (const auto& A : enumerate_group(k, no_cache()))
            for (std::uint64_t L : {2, 3}) EXPECT_TRUE(is_member(k, mat_power(A, L))) << k.name();
}

TEST(Groups, BrutePeriodicCounts) {
    EXPECT_EQ(brute_periodic_count(GroupKind::make(Family::kM, 2, 3), 2), 22);
    EXPECT_EQ(brute_periodic_count(GroupKind::make(Family::kGL, 2, 3), 2), 9);
    for (std::uint64_t q : {5, 7, 13})
        for (std::uint64_t L : {2, 3})
            if (q % L) { EXPECT_EQ(brute_periodic_count(GroupKind::make(Family::kGL, 1, q), L), e_value(q, L, 1)) << q << " " << L; }
    EXPECT_EQ(brute_periodic_count(GroupKind::make(Family::kU, 2, 3), 2), 9);
    EXPECT_EQ(brute_periodic_count(GroupKind::make(Family::kSp, 2, 13), 2), 819);
    EXPECT_EQ(brute_periodic_count(GroupKind::make(Family::kSp, 2, 13), 3), 1456);
}

TEST(Groups, BruteIsParallelInvariant) {
    BruteOptions a, b;
    a.ctx.jobs = 1;
    b.ctx.jobs = 4;
    const auto k = GroupKind::make(Family::kM, 2, 5);
    EXPECT_EQ(brute_periodic_count(k, 2, a), brute_periodic_count(k, 2, b));
}

TEST(Groups, Guard) {
    EnumerationOptions o = no_cache();
    o.filter_guard = 1000;
    BruteOptions bo;
    bo.enumeration = o;
    EXPECT_THROW(brute_periodic_count(GroupKind::make(Family::kM, 3, 3), 2, bo), GuardExceeded);
}
