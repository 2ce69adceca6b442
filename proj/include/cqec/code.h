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
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cqec/gf2.h"
#include "cqec/pauli.h"

namespace cqec {

/// Decomposition b = i^eta * E_s * L_l * S_t of a Pauli word relative to a
/// chosen correction E_s.
struct NormalForm {
    uint64_t syndrome = 0;
    /// Logical index: base 4, logical qubit 1 most significant, digits in
    /// I < X < Y < Z order. For k = 1 this is 0, 1, 2, 3 for I, X, Y, Z.
    uint32_t logical = 0;
    uint64_t stabilizer = 0;
    uint8_t eta = 0;
};

/// An [[n, k, d]] stabilizer code with a fixed generator list and fixed
/// logical representatives. Construction validates everything.
class StabilizerCode {
   public:
    StabilizerCode(std::string name, size_t d, std::vector<PauliWord> generators, std::vector<PauliWord> logical_x,
                   std::vector<PauliWord> logical_z);

    /// Parses the text code format:
    ///
    ///     # comment
    ///     n k d name
    ///     S <pauli>     (n - k lines)
    ///     X <pauli>     (k lines)
    ///     Z <pauli>     (k lines)
    static StabilizerCode from_text(std::string_view text);
    static StabilizerCode from_file(const std::filesystem::path &path);
    std::string to_text() const;

    const std::string &name() const { return name_; }
    size_t n() const { return n_; }
    size_t k() const { return logical_x_.size(); }
    size_t d() const { return d_; }
    size_t num_generators() const { return generators_.size(); }
    size_t num_syndromes() const { return size_t(1) << generators_.size(); }
    size_t num_logicals() const { return size_t(1) << (2 * k()); }

    const std::vector<PauliWord> &generators() const { return generators_; }
    const std::vector<PauliWord> &logical_x() const { return logical_x_; }
    const std::vector<PauliWord> &logical_z() const { return logical_z_; }

    uint64_t syndrome(const PauliWord &word) const;

    /// Hermitian logical operator for a logical index (see NormalForm).
    PauliWord logical_operator(uint32_t index) const;
    /// Logical index of a word that commutes with every generator.
    uint32_t logical_index(const PauliWord &word) const;
    /// Signed stabilizer product over the generators selected by t.
    PauliWord stabilizer_element(uint64_t t) const;
    /// True when the word's bits lie in the stabilizer span.
    bool in_stabilizer_span(const PauliWord &word) const;

    /// Splits word = i^eta E L S, where `correction` must be a Hermitian word
    /// with the same syndrome as `word`.
    NormalForm decompose(const PauliWord &word, const PauliWord &correction) const;

    /// Smallest weight of a logical word outside the stabilizer group, found
    /// by enumeration up to `limit` (0 when none found).
    size_t min_logical_weight(size_t limit) const;

   private:
    void validate() const;

    std::string name_;
    size_t n_;
    size_t d_;
    std::vector<PauliWord> generators_;
    std::vector<PauliWord> logical_x_;
    std::vector<PauliWord> logical_z_;
    Gf2RowSpace stabilizer_space_;
};

/// Names accepted by catalog_code: five_qubit, steane, shor, bare_7_1_3,
/// surface_9_1_3, surface_16_1_4 and repetitionN for 2 <= N <= 32.
std::vector<std::string> catalog_names();
StabilizerCode catalog_code(std::string_view name);
StabilizerCode repetition_code(size_t n);

}  // namespace cqec
