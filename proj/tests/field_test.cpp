/*
 * Copyright (C) 2026 The x1n Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include "support/properties.hpp"
#include "x1n/extension_field.hpp"
#include "x1n/text_form.hpp"

namespace x1n {
namespace {

std::vector<Rational> q_coeffs(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    return v;
}

NumberField alpha_tau() {
    return NumberField(RationalBase{}, {{"alpha", q_coeffs({-1, -2, 1, 1})}, {"tau", q_coeffs({-1, -1, 1})}});
}

NumberField deg9() {
    return NumberField(RationalBase{}, {{"a", q_coeffs({-1, -1, 4, -2, -8, 7, 5, -5, -1, 1})}});
}

FiniteField f5_tower() {
    PrimeBase f5(5);
    return FiniteField(f5, {{"s", {3, 0, 1}}, {"t", {1, 1, 0, 1}}});
}

TEST(FieldCore, TowerReductionByMinpolys) {
    auto k = alpha_tau();
    auto al = k.generator("alpha"), tau = k.generator("tau");
    EXPECT_EQ(tau * tau, tau + k.one());
    EXPECT_EQ(al * (al * al), -(al * al) + 2 * al + k.one());
    EXPECT_EQ(k.dimension(), 6u);
}

TEST(FieldCore, AlphaTauParameterCoordinates) {
    auto k = alpha_tau();
    auto al = k.generator("alpha"), tau = k.generator("tau");
    auto b = (6 * tau - k.from_int(3)) * al * al + (14 * tau - k.from_int(8)) * al + 5 * tau - k.from_int(3);
    EXPECT_EQ(to_text(b), R"([["-3","5"],["-8","14"],["-3","6"]])");
    auto c = tau * al * al + 2 * (tau * al) + k.one();
    EXPECT_EQ(to_text(c), R"([["1","0"],["0","2"],["0","1"]])");
}

TEST(FieldCore, InverseExamples) {
    RationalBase q;
    NumberField qtau(q, {{"tau", q_coeffs({-1, -1, 1})}});
    NumberField qalpha(q, {{"alpha", q_coeffs({-1, -2, 1, 1})}});
    EXPECT_TRUE(qtau.one().inverse().is_one());
    auto tau = qtau.generator(0);
    EXPECT_EQ(tau.inverse(), tau - qtau.one());
    auto al = qalpha.generator(0);
    EXPECT_EQ(al.inverse(), al * al + al - qalpha.from_int(2));
    // same inverse through the tower's linear-solve path
    auto k = alpha_tau();
    auto t2 = k.generator("tau");
    EXPECT_EQ(t2.inverse(), t2 - k.one());
    auto a2 = k.generator("alpha");
    EXPECT_EQ(a2.inverse(), a2 * a2 + a2 - k.from_int(2));
}

TEST(FieldCore, InverseErrors) {
    RationalBase q;
    auto k = alpha_tau();
    EXPECT_THROW(k.zero().inverse(), DivisionByZero);
    // Q[x]/(x^2 - 1) is not a field
    NumberField split(q, {{"x", q_coeffs({-1, 0, 1})}});
    EXPECT_THROW((split.generator(0) - split.one()).inverse(), ZeroDivisor);
    // Q(s, t) with s^2 = t^2 = 2 is a reducible compositum
    NumberField twice(q, {{"s", q_coeffs({-2, 0, 1})}, {"t", q_coeffs({-2, 0, 1})}});
    EXPECT_THROW((twice.generator("s") - twice.generator("t")).inverse(), ZeroDivisor);
    EXPECT_NO_THROW((twice.generator("s") + twice.from_int(1)).inverse());
}

TEST(FieldCore, DescriptorMismatchIsStructural) {
    RationalBase q;
    NumberField a(q, {{"x", q_coeffs({-2, 0, 1})}});
    NumberField b(q, {{"x", q_coeffs({-3, 0, 1})}});
    EXPECT_THROW(a.one() + b.one(), StructuralError);
    EXPECT_THROW(a.one() * b.one(), StructuralError);
    // structurally identical descriptors interoperate
    NumberField a2(q, {{"x", q_coeffs({-2, 0, 1})}});
    EXPECT_EQ(a.generator(0) * a2.generator(0), a.from_int(2));
}

TEST(FieldCore, DescriptorValidation) {
    RationalBase q;
    using G = Generator<RationalBase>;
    EXPECT_THROW(NumberField(q, {G{"x", q_coeffs({1, 2})}, G{"x", q_coeffs({1, 1})}}), StructuralError);
    EXPECT_THROW(NumberField(q, {G{"x", q_coeffs({1, 0, 2})}}), StructuralError);
    EXPECT_THROW(NumberField(q, {G{"x", q_coeffs({1})}}), StructuralError);
    EXPECT_THROW(PrimeBase(10003), InputError);  // 7 * 1429
    EXPECT_NO_THROW(PrimeBase(10007));
    EXPECT_THROW(PrimeBase(1ULL << 62), InputError);
    EXPECT_NO_THROW(PrimeBase(4611686018427387847ULL));  // largest prime below 2^62
}

TEST(FieldCore, PrimeFieldNearTheModulusLimit) {
    FiniteField k = make_finite_field(4611686018427387847ULL);
    auto x = k.from_int(-1);
    EXPECT_TRUE((x * x).is_one());
    auto y = k.from_int(123456789);
    EXPECT_TRUE((y * y.inverse()).is_one());
}

TEST(FieldCore, TextFormErrorsNameTheArray) {
    auto k = alpha_tau();
    try {
        parse_element(k, R"([["1","0"],["0","2"],["0","1"],["0","0"]])");
        FAIL();
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("alpha"), std::string::npos);
    }
    EXPECT_THROW(parse_element(k, R"([["1","0"],["0","2"],["0"]])"), InputError);
    EXPECT_THROW(parse_element(k, R"([["1","0"],["0","2"],["0","x"]])"), InputError);
    EXPECT_THROW(parse_element(k, "[1,2"), InputError);
    FiniteField f7 = make_finite_field(7);
    EXPECT_EQ(to_text(parse_element(f7, R"("-1/2")")), R"("3")");
}

TEST(FieldCoreProperties, RingAxioms) {
    props::Rng rng(1);
    for (const auto& r : {props::ring_axioms(alpha_tau(), rng), props::ring_axioms(deg9(), rng),
                          props::ring_axioms(make_finite_field(101), rng),
                          props::ring_axioms(make_finite_field(7, find_irreducible(7, 3)), rng),
                          props::ring_axioms(f5_tower(), rng)})
        EXPECT_TRUE(r.ok()) << r.name << ": " << r.failure;
}

TEST(FieldCoreProperties, Inversion) {
    props::Rng rng(2);
    for (const auto& r :
         {props::inversion(alpha_tau(), rng), props::inversion(deg9(), rng), props::inversion(make_finite_field(10007), rng),
          props::inversion(make_finite_field(3, find_irreducible(3, 6)), rng), props::inversion(f5_tower(), rng)})
        EXPECT_TRUE(r.ok()) << r.name << ": " << r.failure;
}

TEST(FieldCoreProperties, TextRoundTrip) {
    props::Rng rng(3);
    EXPECT_TRUE(props::text_round_trip(alpha_tau(), rng).ok());
    EXPECT_TRUE(props::text_round_trip(deg9(), rng).ok());
    EXPECT_TRUE(props::text_round_trip(f5_tower(), rng).ok());
}

TEST(FieldCoreProperties, TowerAgreesWithMatrixModel) {
    props::Rng rng(4);
    auto r = props::tower_matrix_model(alpha_tau(), rng);
    EXPECT_TRUE(r.ok()) << r.failure;
}

TEST(FieldCoreProperties, FrobeniusIsIdentityAfterDegreeSteps) {
    props::Rng rng(5);
    for (auto [p, d] : {std::pair{3u, 6u}, {101u, 2u}, {2u, 5u}, {7u, 3u}}) {
        auto r = props::frobenius_identity(make_finite_field(p, find_irreducible(p, d)), rng);
        EXPECT_TRUE(r.ok()) << r.name << ": " << r.failure;
    }
}

}  // namespace
}  // namespace x1n
