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
#include <string>
#include <string_view>
#include <vector>

#include "cqec/code.h"

namespace cqec {

enum class DecoderKind {
    /// Minimum weight over all Pauli words.
    symmetric,
    /// Minimum weight over Z-type words; syndromes no Z word reaches fall
    /// back to the symmetric choice.
    z_only,
    /// Symmetric, except that weight-2 ties prefer one X and one Z letter.
    symmetry_preserving,
};

enum class TieBreak {
    /// Dictionary order of the letter string, I < X < Y < Z, qubit 1 first.
    lexicographic,
    /// Sorted support positions compared first (so qubit 1 is preferred),
    /// then the dictionary order.
    support_order,
};

struct DecoderOptions {
    DecoderKind kind = DecoderKind::symmetric;
    TieBreak tie_break = TieBreak::lexicographic;
};

DecoderKind parse_decoder_kind(std::string_view text);
std::string to_string(DecoderKind kind);
TieBreak parse_tie_break(std::string_view text);
std::string to_string(TieBreak tie);

/// Syndrome-indexed table of Hermitian corrections.
class DecoderTable {
   public:
    static DecoderTable build(const StabilizerCode &code, DecoderOptions options = {});
    /// Same table found by visiting every word in weight order; slow, kept
    /// to cross-check build().
    static DecoderTable build_reference(const StabilizerCode &code, DecoderOptions options = {});

    const StabilizerCode &code() const { return code_; }
    const DecoderOptions &options() const { return options_; }
    size_t size() const { return corrections_.size(); }
    const PauliWord &correction(uint64_t s) const { return corrections_.at(s); }
    const std::vector<PauliWord> &corrections() const { return corrections_; }

    NormalForm decompose(const PauliWord &word) const;

    /// "syndrome,correction,weight" rows in syndrome order; syndrome bits are
    /// listed generator 1 first.
    std::string to_csv() const;

   private:
    DecoderTable(StabilizerCode code, DecoderOptions options, std::vector<PauliWord> corrections);

    StabilizerCode code_;
    DecoderOptions options_;
    std::vector<PauliWord> corrections_;
};

}  // namespace cqec
