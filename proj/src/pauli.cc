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

#include <bit>
#include <stdexcept>

namespace cqec {

namespace {
void check_n(size_t n) {
    if (n == 0 || n > kMaxQubits) {
        throw std::invalid_argument("qubit count must be in 1.." + std::to_string(kMaxQubits));
    }
}
uint32_t mask_of(size_t n) {
    return n >= 32 ? 0xFFFFFFFFu : ((uint32_t(1) << n) - 1);
}
}  // namespace

PauliWord PauliWord::identity(size_t n) {
    check_n(n);
    PauliWord p;
    p.n = uint8_t(n);
    return p;
}

PauliWord PauliWord::from_letters(size_t n, uint32_t x, uint32_t z) {
    check_n(n);
    if (((x | z) & ~mask_of(n)) != 0) {
        throw std::invalid_argument("Pauli bits outside the register");
    }
    PauliWord p;
    p.n = uint8_t(n);
    p.x = x;
    p.z = z;
    return p;
}

PauliWord PauliWord::z_word(size_t n, uint32_t mask) {
    return from_letters(n, 0, mask);
}

PauliWord PauliWord::from_str(std::string_view text) {
    uint8_t phase = 0;
    size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') {
            phase = 2;
        }
        pos++;
    }
    if (pos < text.size() && text[pos] == 'i') {
        phase = (phase + 1) & 3;
        pos++;
    }
    std::string_view body = text.substr(pos);
    check_n(body.size());
    PauliWord p = identity(body.size());
    for (size_t q = 0; q < body.size(); q++) {
        switch (body[q]) {
            case 'I':
            case '_':
                break;
            case 'X':
                p.set_letter(q, Letter::X);
                break;
            case 'Y':
                p.set_letter(q, Letter::Y);
                break;
            case 'Z':
                p.set_letter(q, Letter::Z);
                break;
            default:
                throw std::invalid_argument("bad Pauli character '" + std::string(1, body[q]) + "' in " +
                                            std::string(text));
        }
    }
    p.phase = phase;
    return p;
}

Letter PauliWord::letter(size_t q) const {
    bool bx = (x >> q) & 1;
    bool bz = (z >> q) & 1;
    if (bx && bz) {
        return Letter::Y;
    }
    if (bx) {
        return Letter::X;
    }
    return bz ? Letter::Z : Letter::I;
}

void PauliWord::set_letter(size_t q, Letter l) {
    uint32_t bit = uint32_t(1) << q;
    x &= ~bit;
    z &= ~bit;
    if (l == Letter::X || l == Letter::Y) {
        x |= bit;
    }
    if (l == Letter::Z || l == Letter::Y) {
        z |= bit;
    }
}

std::string PauliWord::letters() const {
    std::string out(n, 'I');
    for (size_t q = 0; q < n; q++) {
        out[q] = "IXYZ"[size_t(letter(q))];
    }
    return out;
}

std::string PauliWord::str() const {
    static const char *signs[] = {"+", "+i", "-", "-i"};
    return signs[phase & 3] + letters();
}

size_t PauliWord::weight() const {
    return std::popcount(x | z);
}

XyzCounts PauliWord::counts() const {
    XyzCounts c;
    c.x = std::popcount(x & ~z);
    c.y = std::popcount(x & z);
    c.z = std::popcount(z & ~x);
    return c;
}

uint64_t PauliWord::lex_key() const {
    uint64_t key = 0;
    for (size_t q = 0; q < n; q++) {
        key = (key << 2) | uint64_t(letter(q));
    }
    return key;
}

PauliWord PauliWord::operator*(const PauliWord &rhs) const {
    if (n != rhs.n) {
        throw std::invalid_argument("Pauli size mismatch");
    }
    PauliWord out;
    out.n = n;
    out.x = x ^ rhs.x;
    out.z = z ^ rhs.z;
    out.phase = uint8_t((phase + rhs.phase + product_phase(x, z, rhs.x, rhs.z)) & 3);
    return out;
}

uint64_t syndrome(const PauliWord &word, std::span<const PauliWord> gens) {
    uint64_t s = 0;
    for (size_t i = 0; i < gens.size(); i++) {
        if (!commutes(word, gens[i])) {
            s |= uint64_t(1) << i;
        }
    }
    return s;
}

std::string syndrome_str(uint64_t s, size_t num_generators) {
    std::string out(num_generators, '0');
    for (size_t i = 0; i < num_generators; i++) {
        if ((s >> i) & 1) {
            out[i] = '1';
        }
    }
    return out;
}

}  // namespace cqec
