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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace cqec {

constexpr size_t kMaxQubits = 32;

/// Single-qubit letters, numbered in string order I < X < Y < Z.
enum class Letter : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

struct XyzCounts {
    size_t x = 0;
    size_t y = 0;
    size_t z = 0;
};

/// An n-qubit Pauli operator i^phase * P_b in binary symplectic form.
///
/// P_b is the Hermitian word i^{|bx.bz|} X^bx Z^bz, which is the plain tensor
/// product of the letters. Bit j of `x` and `z` refers to qubit j+1, the
/// leftmost character of the text form.
struct PauliWord {
    uint32_t x = 0;
    uint32_t z = 0;
    uint8_t n = 0;
    uint8_t phase = 0;

    static PauliWord identity(size_t n);
    static PauliWord from_letters(size_t n, uint32_t x, uint32_t z);
    static PauliWord z_word(size_t n, uint32_t mask);
    /// Parses "+XIZ", "-iYY", "IXZ". Throws std::invalid_argument.
    static PauliWord from_str(std::string_view text);

    Letter letter(size_t q) const;
    void set_letter(size_t q, Letter l);

    /// Letters only, no sign.
    std::string letters() const;
    /// Sign prefix ("+", "-", "+i", "-i") followed by letters.
    std::string str() const;

    size_t weight() const;
    XyzCounts counts() const;
    uint32_t support() const { return x | z; }

    /// Base-4 key with qubit 1 most significant. Smaller key means earlier
    /// in the I < X < Y < Z dictionary order.
    uint64_t lex_key() const;

    /// x bits in the low half, z bits in the high half.
    uint64_t packed() const { return uint64_t(x) | (uint64_t(z) << 32); }

    bool hermitian() const { return (phase & 1) == 0; }
    bool same_bits(const PauliWord &other) const { return x == other.x && z == other.z && n == other.n; }
    PauliWord without_phase() const { return from_letters(n, x, z); }

    bool operator==(const PauliWord &other) const = default;
    PauliWord operator*(const PauliWord &rhs) const;
};

/// Power of i picked up when multiplying two Hermitian words:
/// P_a P_b = i^k P_{a+b}.
inline int product_phase(uint32_t ax, uint32_t az, uint32_t bx, uint32_t bz) {
    int e = std::popcount(ax & az) + std::popcount(bx & bz) + 2 * std::popcount(az & bx) -
            std::popcount((ax ^ bx) & (az ^ bz));
    return e & 3;
}

inline bool commutes(const PauliWord &a, const PauliWord &b) {
    return ((std::popcount(a.x & b.z) + std::popcount(a.z & b.x)) & 1) == 0;
}

/// Syndrome bit i is set when word anticommutes with gens[i].
uint64_t syndrome(const PauliWord &word, std::span<const PauliWord> gens);

std::string syndrome_str(uint64_t s, size_t num_generators);

}  // namespace cqec

namespace cqec {

/// Next larger integer with the same popcount (Gosper's hack).
inline uint32_t next_same_popcount(uint32_t v) {
    uint32_t t = v | (v - 1);
    return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

/// Calls fn(x, z) for every word of exactly weight w on n qubits. With
/// z_only set, only Z-type words are visited. Supports are visited in
/// increasing numeric order of the support mask.
template <typename F>
void for_each_word_of_weight(size_t n, size_t w, bool z_only, F &&fn) {
    if (w > n) {
        return;
    }
    if (w == 0) {
        fn(uint32_t(0), uint32_t(0));
        return;
    }
    const uint32_t first = uint32_t((uint64_t(1) << w) - 1);
    const uint32_t last = first << (n - w);
    uint32_t positions[kMaxQubits];
    for (uint32_t m = first;; m = next_same_popcount(m)) {
        size_t c = 0;
        for (uint32_t r = m; r; r &= r - 1) {
            positions[c++] = uint32_t(1) << std::countr_zero(r);
        }
        if (z_only) {
            fn(uint32_t(0), m);
        } else {
            // Each support qubit takes X, Y or Z; digit 0, 1, 2 respectively.
            uint32_t digits[kMaxQubits] = {};
            while (true) {
                uint32_t x = 0, z = 0;
                for (size_t i = 0; i < w; i++) {
                    if (digits[i] != 2) {
                        x |= positions[i];
                    }
                    if (digits[i] != 0) {
                        z |= positions[i];
                    }
                }
                fn(x, z);
                size_t i = 0;
                while (i < w && digits[i] == 2) {
                    digits[i++] = 0;
                }
                if (i == w) {
                    break;
                }
                digits[i]++;
            }
        }
        if (m == last) {
            break;
        }
    }
}

}  // namespace cqec
