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

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace cqec {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Sparse polynomial in x and y with exact integer coefficients.
class Poly2 {
   public:
    /// (power of x, power of y)
    using Exponent = std::pair<uint32_t, uint32_t>;

    Poly2() = default;
    static Poly2 monomial(const BigInt &c, uint32_t xp, uint32_t yp);
    static Poly2 constant(const BigInt &c) { return monomial(c, 0, 0); }
    static Poly2 var_x() { return monomial(1, 1, 0); }
    static Poly2 var_y() { return monomial(1, 0, 1); }
    /// Builds from (coefficient, x power, y power) triples.
    static Poly2 from_terms(const std::vector<std::tuple<long long, uint32_t, uint32_t>> &terms);

    const std::map<Exponent, BigInt> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t num_terms() const { return terms_.size(); }
    BigInt coeff(uint32_t xp, uint32_t yp) const;

    void add_term(const BigInt &c, uint32_t xp, uint32_t yp);
    Poly2 &operator+=(const Poly2 &o);
    Poly2 &operator-=(const Poly2 &o);
    Poly2 operator+(const Poly2 &o) const;
    Poly2 operator-(const Poly2 &o) const;
    Poly2 operator-() const;
    Poly2 operator*(const Poly2 &o) const;
    Poly2 pow(uint32_t e) const;
    bool operator==(const Poly2 &o) const { return terms_ == o.terms_; }

    /// True when every term has a y power of the given parity.
    bool y_parity_is(uint32_t parity) const;

    BigRational evaluate(const BigRational &x, const BigRational &y) const;
    long double evaluate(long double x, long double y) const;

    /// Human-readable form such as "21*x^2 - 98*x^3 + 42*y^4".
    std::string str() const;

   private:
    std::map<Exponent, BigInt> terms_;
};

/// Double-precision evaluator for a fixed Poly2, grouped by y power and
/// evaluated by Horner's rule in x.
class FastPoly2 {
   public:
    FastPoly2() = default;
    explicit FastPoly2(const Poly2 &p);
    double operator()(double x, double y) const;

   private:
    // rows_[j] holds the x-polynomial multiplying y^ypow_[j].
    std::vector<std::vector<long double>> rows_;
    std::vector<uint32_t> ypow_;
};

BigInt binomial(uint32_t n, uint32_t k);

}  // namespace cqec
