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

#include <cmath>
#include <sstream>

namespace cqec {

Poly2 Poly2::monomial(const BigInt &c, uint32_t xp, uint32_t yp) {
    Poly2 p;
    p.add_term(c, xp, yp);
    return p;
}

Poly2 Poly2::from_terms(const std::vector<std::tuple<long long, uint32_t, uint32_t>> &terms) {
    Poly2 p;
    for (const auto &[c, xp, yp] : terms) {
        p.add_term(BigInt(c), xp, yp);
    }
    return p;
}

BigInt Poly2::coeff(uint32_t xp, uint32_t yp) const {
    auto it = terms_.find({xp, yp});
    return it == terms_.end() ? BigInt(0) : it->second;
}

void Poly2::add_term(const BigInt &c, uint32_t xp, uint32_t yp) {
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace({xp, yp}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

Poly2 &Poly2::operator+=(const Poly2 &o) {
    for (const auto &[e, c] : o.terms_) {
        add_term(c, e.first, e.second);
    }
    return *this;
}

Poly2 &Poly2::operator-=(const Poly2 &o) {
    for (const auto &[e, c] : o.terms_) {
        add_term(-c, e.first, e.second);
    }
    return *this;
}

Poly2 Poly2::operator+(const Poly2 &o) const {
    Poly2 r = *this;
    r += o;
    return r;
}

Poly2 Poly2::operator-(const Poly2 &o) const {
    Poly2 r = *this;
    r -= o;
    return r;
}

Poly2 Poly2::operator-() const {
    Poly2 r;
    for (const auto &[e, c] : terms_) {
        r.terms_.emplace(e, -c);
    }
    return r;
}

Poly2 Poly2::operator*(const Poly2 &o) const {
    Poly2 r;
    for (const auto &[ea, ca] : terms_) {
        for (const auto &[eb, cb] : o.terms_) {
            r.add_term(ca * cb, ea.first + eb.first, ea.second + eb.second);
        }
    }
    return r;
}

Poly2 Poly2::pow(uint32_t e) const {
    Poly2 result = constant(1);
    Poly2 base = *this;
    while (e) {
        if (e & 1) {
            result = result * base;
        }
        e >>= 1;
        if (e) {
            base = base * base;
        }
    }
    return result;
}

bool Poly2::y_parity_is(uint32_t parity) const {
    for (const auto &[e, c] : terms_) {
        if ((e.second & 1) != (parity & 1)) {
            return false;
        }
    }
    return true;
}

namespace {
BigRational rational_pow(const BigRational &b, uint32_t e) {
    BigRational r = 1;
    for (uint32_t i = 0; i < e; i++) {
        r *= b;
    }
    return r;
}
}  // namespace

BigRational Poly2::evaluate(const BigRational &x, const BigRational &y) const {
    BigRational total = 0;
    for (const auto &[e, c] : terms_) {
        total += BigRational(c) * rational_pow(x, e.first) * rational_pow(y, e.second);
    }
    return total;
}

long double Poly2::evaluate(long double x, long double y) const {
    long double total = 0;
    for (const auto &[e, c] : terms_) {
        total += c.convert_to<long double>() * std::pow(x, (long double)e.first) * std::pow(y, (long double)e.second);
    }
    return total;
}

std::string Poly2::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) {
                out << "-";
            }
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool bare = e.first == 0 && e.second == 0;
        if (mag != 1 || bare) {
            out << mag;
            if (!bare) {
                out << "*";
            }
        }
        if (e.first) {
            out << "x";
            if (e.first > 1) {
                out << "^" << e.first;
            }
            if (e.second) {
                out << "*";
            }
        }
        if (e.second) {
            out << "y";
            if (e.second > 1) {
                out << "^" << e.second;
            }
        }
    }
    return out.str();
}

FastPoly2::FastPoly2(const Poly2 &p) {
    for (const auto &[e, c] : p.terms()) {
        size_t j = 0;
        while (j < ypow_.size() && ypow_[j] != e.second) {
            j++;
        }
        if (j == ypow_.size()) {
            ypow_.push_back(e.second);
            rows_.emplace_back();
        }
        if (rows_[j].size() <= e.first) {
            rows_[j].resize(e.first + 1, 0.0L);
        }
        rows_[j][e.first] += c.convert_to<long double>();
    }
}

double FastPoly2::operator()(double x, double y) const {
    long double total = 0;
    for (size_t j = 0; j < rows_.size(); j++) {
        long double acc = 0;
        const auto &row = rows_[j];
        for (size_t i = row.size(); i-- > 0;) {
            acc = acc * x + row[i];
        }
        long double yp = 1;
        for (uint32_t e = 0; e < ypow_[j]; e++) {
            yp *= y;
        }
        total += acc * yp;
    }
    return double(total);
}

BigInt binomial(uint32_t n, uint32_t k) {
    if (k > n) {
        return 0;
    }
    BigInt r = 1;
    for (uint32_t i = 1; i <= k; i++) {
        r = r * (n - k + i) / i;
    }
    return r;
}

}  // namespace cqec
