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

#include <ffdyn/ff.hpp>

using namespace ffdyn;

TEST(Field, PrimeFieldHasDegreeOne) {
    auto F = make_field(7, 1);
    EXPECT_EQ(F->order(), 7u);
    EXPECT_EQ(F->degree(), 1u);
    EXPECT_EQ(F->characteristic(), 7u);
}

TEST(Field, LexLeastModulus) {
    auto F4 = make_field(2, 2);
    EXPECT_EQ(std::vector<std::uint32_t>(F4->modulus().begin(), F4->modulus().end()), (std::vector<std::uint32_t>{1, 1, 1}));
    auto F9 = make_field(3, 2);
    EXPECT_EQ(std::vector<std::uint32_t>(F9->modulus().begin(), F9->modulus().end()), (std::vector<std::uint32_t>{1, 0, 1}));
}

TEST(Field, RejectsBadInput) {
    EXPECT_THROW(make_field(6, 1), InvalidArgument);
    EXPECT_THROW(make_field(5, 0), InvalidArgument);
    EXPECT_THROW(make_field_of_order(12), InvalidArgument);
}

TEST(Field, AxiomsExhaustiveSmall) {
    for (std::uint64_t q : {4, 8, 9, 25, 27, 49}) {
        auto F = make_field_of_order(q);
        for (std::uint64_t i = 0; i < q; ++i) {
            const Elem a = F->from_index(i);
            EXPECT_EQ(F->index(a), i);
            EXPECT_EQ(F->add(a, F->neg(a)), 0u);
            if (a != 0) { EXPECT_EQ(F->mul(a, F->inv(a)), F->one()); }
            for (std::uint64_t j = 0; j < q; j += 3) {
                const Elem b = F->from_index(j);
                EXPECT_EQ(F->mul(a, b), F->mul(b, a));
                EXPECT_EQ(F->mul(a, F->add(b, F->one())), F->add(F->mul(a, b), a));
            }
        }
    }
}

TEST(Field, ElemPow) {
    auto F7 = make_field(7, 1);
    const auto three = FieldElem::from_int(F7, 3);
    EXPECT_EQ(elem_pow(three, 6), FieldElem::from_int(F7, 1));
    EXPECT_EQ(elem_pow(three, 2), FieldElem::from_int(F7, 2));
    EXPECT_EQ(elem_pow(FieldElem::from_int(F7, 1), ExactInt("123456789012345678901234567890")), FieldElem::from_int(F7, 1));
    EXPECT_EQ(elem_pow(FieldElem::from_int(F7, 0), 0), FieldElem::from_int(F7, 1));
    EXPECT_THROW(elem_pow(three, -1), InvalidArgument);

    auto F59 = make_field(59, 1);
    for (std::int64_t g = 1; g < 59; ++g) EXPECT_EQ(elem_pow(FieldElem::from_int(F59, g), 58).value(), 1u);
}

TEST(Field, MultOrder) {
    auto F7 = make_field(7, 1);
    EXPECT_EQ(mult_order(FieldElem::from_int(F7, 1)), 1);
    EXPECT_EQ(mult_order(FieldElem::from_int(F7, 3)), 6);
    EXPECT_EQ(mult_order(FieldElem::from_int(F7, 2)), 3);
    auto F9 = make_field(3, 2);
    const std::vector<std::uint32_t> t{0, 1};
    EXPECT_EQ(mult_order(FieldElem::from_coeffs(F9, t)), 4);
    EXPECT_THROW(mult_order(FieldElem::from_int(F7, 0)), InvalidArgument);
}

TEST(Field, ConjugationIsFrobenius) {
    auto F9 = make_quadratic_extension(3, 1);
    const std::vector<std::uint32_t> t{0, 1};
    const auto x = FieldElem::from_coeffs(F9, t);
    EXPECT_EQ(conj_q(x), -x);
    for (std::uint64_t i = 0; i < 9; ++i) {
        const FieldElem y{F9, F9->from_index(i)};
        EXPECT_EQ(conj_q(conj_q(y)), y);
    }
    for (std::int64_t c = 0; c < 3; ++c) EXPECT_EQ(conj_q(FieldElem::from_int(F9, c)), FieldElem::from_int(F9, c));

    auto F16 = make_quadratic_extension(2, 2);
    EXPECT_EQ(F16->order(), 16u);
    std::size_t fixed = 0;
    for (std::uint64_t i = 0; i < 16; ++i) fixed += F16->conj(F16->from_index(i)) == F16->from_index(i);
    EXPECT_EQ(fixed, 4u);
    EXPECT_THROW(conj_q(FieldElem::from_int(make_field(7, 1), 2)), InvalidArgument);
}

TEST(Field, MixedFieldsRejected) {
    const auto a = FieldElem::from_int(make_field(5, 1), 1);
    const auto b = FieldElem::from_int(make_field(7, 1), 1);
    EXPECT_THROW(a + b, InvalidArgument);
}
