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

#include <ffdyn/verify.hpp>

using namespace ffdyn;

TEST(Verify, EverySuitePasses) {
    for (const auto& suite : verify_suites()) {
        const auto r = run_verify(suite);
        EXPECT_GT(r.checks.size(), 0u) << suite;
        for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << c.suite << "/" << c.name << " expected " << c.expected << " got " << c.got;
        EXPECT_EQ(r.skipped(), 0u) << suite;
    }
}

TEST(Verify, BudgetSkipsLargeChecks) {
    const auto r = run_verify("dynamics", 100);
    EXPECT_GT(r.skipped(), 0u);
    EXPECT_TRUE(r.ok());
}

TEST(Verify, JobsDoNotChangeReport) {
    const auto a = run_verify("classes", kDefaultVerifyBudget, ParallelContext{1});
    const auto b = run_verify("classes", kDefaultVerifyBudget, ParallelContext{3});
    ASSERT_EQ(a.checks.size(), b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        EXPECT_EQ(a.checks[i].name, b.checks[i].name);
        EXPECT_EQ(a.checks[i].params, b.checks[i].params);
        EXPECT_EQ(a.checks[i].got, b.checks[i].got);
    }
}

TEST(Verify, UnknownSuite) { EXPECT_THROW(run_verify("nope"), InvalidArgument); }
