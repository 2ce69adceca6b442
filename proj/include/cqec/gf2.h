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

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cqec {

/// Row space of a set of 64-bit GF(2) vectors, kept in reduced echelon form
/// together with the combination of input rows that built each reduced row.
class Gf2RowSpace {
   public:
    Gf2RowSpace() = default;
    explicit Gf2RowSpace(std::span<const uint64_t> rows);

    size_t rank() const { return reduced_.size(); }
    size_t num_inputs() const { return num_inputs_; }
    bool contains(uint64_t v) const { return reduce(v) == 0; }

    /// Residue of v after eliminating every pivot.
    uint64_t reduce(uint64_t v) const;

    /// Mask t of input rows with XOR_i t_i rows[i] == v, if v is in the span.
    std::optional<uint64_t> combination(uint64_t v) const;

   private:
    std::vector<uint64_t> reduced_;
    std::vector<uint64_t> combo_;
    std::vector<int> pivot_;
    size_t num_inputs_ = 0;
};

}  // namespace cqec
