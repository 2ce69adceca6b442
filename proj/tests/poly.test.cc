// Copyright 2026 The coherentqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cqec/poly.h"

#include <gtest/gtest.h>

using namespace cqec;

TEST(Poly2, Arithmetic) {
    Poly2 x = Poly2::var_x(), y = Poly2::var_y(), one = Poly2::constant(1);
    Poly2 p = (one - x).pow(3);
    EXPECT_EQ(p.coeff(0, 0), 1);
    EXPECT_EQ(p.coeff(1, 0), -3);
    EXPECT_EQ(p.coeff(2, 0), 3);
    EXPECT_EQ(p.coeff(3, 0), -1);
    Poly2 q = (x + y) * (x - y);
    EXPECT_EQ(q, x * x - y * y);
    EXPECT_TRUE((q - q).is_zero());
    EXPECT_EQ((-q).coeff(0, 2), 1);
    EXPECT_TRUE(y.pow(3).y_parity_is(1));
    EXPECT_FALSE(q.y_parity_is(1));
}

TEST(Poly2, Text) {
    Poly2 p = Poly2::from_terms({{21, 2, 0}, {-98, 3, 0}, {1, 0, 1}});
    EXPECT_EQ(p.str(), "y + 21*x^2 - 98*x^3");
    EXPECT_EQ(Poly2().str(), "0");
}

TEST(Poly2, ExactAndFastEvaluation) {
    Poly2 p = Poly2::from_terms({{21, 2, 0}, {-98, 3, 0}, {42, 0, 4}, {-252, 1, 4}});
    BigRational x(1, 10), y(1, 20);
    BigRational exact = p.evaluate(x, y);
    BigRational expect = BigRational(21) / 100 - BigRational(98) / 1000 + BigRational(42) / 160000 -
                         BigRational(252) / 1600000;
    EXPECT_EQ(exact, expect);
    EXPECT_NEAR(double(p.evaluate(0.1L, 0.05L)), exact.convert_to<double>(), 1e-16);
    EXPECT_NEAR(FastPoly2(p)(0.1, 0.05), exact.convert_to<double>(), 1e-16);
}

TEST(Poly2, LargeCoefficients) {
    Poly2 p = (Poly2::constant(1) + Poly2::var_x()).pow(80);
    EXPECT_EQ(p.coeff(40, 0), binomial(80, 40));
    EXPECT_GT(binomial(80, 40), BigInt(std::numeric_limits<long long>::max()));
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(3, 5), 0);
}
