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

#include "cqec/gf2.h"

#include <bit>
#include <stdexcept>

namespace cqec {

Gf2RowSpace::Gf2RowSpace(std::span<const uint64_t> rows) : num_inputs_(rows.size()) {
    if (rows.size() > 64) {
        throw std::invalid_argument("at most 64 rows supported");
    }
    for (size_t i = 0; i < rows.size(); i++) {
        uint64_t v = rows[i];
        uint64_t c = uint64_t(1) << i;
        for (size_t r = 0; r < reduced_.size(); r++) {
            if ((v >> pivot_[r]) & 1) {
                v ^= reduced_[r];
                c ^= combo_[r];
            }
        }
        if (v == 0) {
            continue;
        }
        int p = std::countr_zero(v);
        // Keep the rows fully reduced so each pivot appears in one row only.
        for (size_t r = 0; r < reduced_.size(); r++) {
            if ((reduced_[r] >> p) & 1) {
                reduced_[r] ^= v;
                combo_[r] ^= c;
            }
        }
        reduced_.push_back(v);
        combo_.push_back(c);
        pivot_.push_back(p);
    }
}

uint64_t Gf2RowSpace::reduce(uint64_t v) const {
    for (size_t r = 0; r < reduced_.size(); r++) {
        if ((v >> pivot_[r]) & 1) {
            v ^= reduced_[r];
        }
    }
    return v;
}

std::optional<uint64_t> Gf2RowSpace::combination(uint64_t v) const {
    uint64_t c = 0;
    for (size_t r = 0; r < reduced_.size(); r++) {
        if ((v >> pivot_[r]) & 1) {
            v ^= reduced_[r];
            c ^= combo_[r];
        }
    }
    if (v != 0) {
        return std::nullopt;
    }
    return c;
}

}  // namespace cqec
