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

#include "cqec/pauli.h"

#include <Eigen/Dense>
#include <gtest/gtest.h>
#include <random>

using namespace cqec;

namespace {

Eigen::MatrixXcd letter_matrix(Letter l) {
    using C = std::complex<double>;
    Eigen::Matrix2cd m;
    switch (l) {
        case Letter::I:
            m << 1, 0, 0, 1;
            break;
        case Letter::X:
            m << 0, 1, 1, 0;
            break;
        case Letter::Y:
            m << 0, C(0, -1), C(0, 1), 0;
            break;
        case Letter::Z:
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

// Qubit 1 is the leftmost tensor factor.
Eigen::MatrixXcd dense(const PauliWord &w) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
    for (size_t q = 0; q < w.n; q++) {
        Eigen::MatrixXcd l = letter_matrix(w.letter(q));
        Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
        for (Eigen::Index i = 0; i < m.rows(); i++) {
            for (Eigen::Index j = 0; j < m.cols(); j++) {
                next.block(2 * i, 2 * j, 2, 2) = m(i, j) * l;
            }
        }
        m = next;
    }
    static const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return ipow[w.phase & 3] * m;
}

PauliWord random_word(std::mt19937_64 &rng, size_t n) {
    uint32_t mask = (uint32_t(1) << n) - 1;
    PauliWord w = PauliWord::from_letters(n, uint32_t(rng()) & mask, uint32_t(rng()) & mask);
    w.phase = uint8_t(rng() & 3);
    return w;
}

}  // namespace

TEST(PauliWord, ParseAndPrint) {
    PauliWord w = PauliWord::from_str("-iXYZI");
    EXPECT_EQ(w.n, 4);
    EXPECT_EQ(w.letters(), "XYZI");
    EXPECT_EQ(w.str(), "-iXYZI");
    EXPECT_EQ(w.letter(0), Letter::X);
    EXPECT_EQ(w.letter(1), Letter::Y);
    EXPECT_EQ(w.weight(), 3u);
    EXPECT_EQ(PauliWord::from_str("+XX").str(), "+XX");
    EXPECT_EQ(PauliWord::from_str("X_Z").letters(), "XIZ");
    EXPECT_THROW(PauliWord::from_str("XQ"), std::invalid_argument);
    EXPECT_THROW(PauliWord::from_str(""), std::invalid_argument);
}

TEST(PauliWord, LexKeyOrder) {
    EXPECT_LT(PauliWord::from_str("XI").lex_key(), PauliWord::from_str("YI").lex_key());
    EXPECT_LT(PauliWord::from_str("YZ").lex_key(), PauliWord::from_str("ZI").lex_key());
    EXPECT_LT(PauliWord::from_str("IZ").lex_key(), PauliWord::from_str("XI").lex_key());
}

TEST(PauliWord, ProductsMatchDenseMatrices) {
    std::mt19937_64 rng(7);
    for (size_t n = 1; n <= 4; n++) {
        for (int trial = 0; trial < 300; trial++) {
            PauliWord a = random_word(rng, n), b = random_word(rng, n);
            Eigen::MatrixXcd expect = dense(a) * dense(b);
            EXPECT_LT((dense(a * b) - expect).norm(), 1e-12) << a.str() << " * " << b.str();
            bool dense_commute = (dense(a) * dense(b) - dense(b) * dense(a)).norm() < 1e-12;
            EXPECT_EQ(commutes(a, b), dense_commute);
        }
    }
}

TEST(PauliWord, SinglePauliTable) {
    // Y Z = i X; the opposite sign would follow from a (-i)^{b.Lambda.b'} rule.
    EXPECT_EQ((PauliWord::from_str("Y") * PauliWord::from_str("Z")).str(), "+iX");
    EXPECT_EQ((PauliWord::from_str("X") * PauliWord::from_str("Y")).str(), "+iZ");
    EXPECT_EQ((PauliWord::from_str("Z") * PauliWord::from_str("X")).str(), "+iY");
    EXPECT_EQ((PauliWord::from_str("Y") * PauliWord::from_str("X")).str(), "-iZ");
}

TEST(PauliWord, HermitianCanonicalForm) {
    for (uint32_t x = 0; x < 8; x++) {
        for (uint32_t z = 0; z < 8; z++) {
            PauliWord w = PauliWord::from_letters(3, x, z);
            Eigen::MatrixXcd m = dense(w);
            EXPECT_LT((m - m.adjoint()).norm(), 1e-12);
            EXPECT_TRUE(w.hermitian());
        }
    }
}

TEST(PauliWord, Syndrome) {
    std::vector<PauliWord> gens = {PauliWord::from_str("ZZI"), PauliWord::from_str("IZZ")};
    EXPECT_EQ(syndrome(PauliWord::from_str("XII"), gens), 1u);
    EXPECT_EQ(syndrome(PauliWord::from_str("IIX"), gens), 2u);
    EXPECT_EQ(syndrome(PauliWord::from_str("IXI"), gens), 3u);
    EXPECT_EQ(syndrome_str(1, 2), "10");
}

TEST(PauliWord, WeightEnumerationCounts) {
    for (size_t n = 1; n <= 6; n++) {
        size_t total = 0, ztotal = 0;
        for (size_t w = 0; w <= n; w++) {
            size_t count = 0, zcount = 0;
            for_each_word_of_weight(n, w, false, [&](uint32_t x, uint32_t z) {
                EXPECT_EQ(size_t(std::popcount(x | z)), w);
                count++;
            });
            for_each_word_of_weight(n, w, true, [&](uint32_t x, uint32_t z) {
                EXPECT_EQ(x, 0u);
                EXPECT_EQ(size_t(std::popcount(z)), w);
                zcount++;
            });
            total += count;
            ztotal += zcount;
        }
        EXPECT_EQ(total, size_t(1) << (2 * n));
        EXPECT_EQ(ztotal, size_t(1) << n);
    }
}
