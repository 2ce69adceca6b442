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
#include <vector>

#include "cqec/channel.h"

namespace cqec {

/// perm[q] is the image of qubit q (0-based).
using Permutation = std::vector<uint8_t>;

/// Moves the letter on qubit q to qubit perm[q]; the phase is kept.
PauliWord permute(const PauliWord &word, const Permutation &perm);

struct PermutationGroup {
    size_t n = 0;
    /// Every element, sorted, identity first.
    std::vector<Permutation> elements;
    /// A small generating set.
    std::vector<Permutation> generators;

    size_t order() const { return elements.size(); }
};

struct AutomorphismOptions {
    /// Require each logical representative to be fixed exactly. When false
    /// it only has to be fixed up to a stabilizer.
    bool exact_logicals = true;
};

/// Qubit permutations that preserve the stabilizer group (with signs) and
/// the logical operators. Requires n <= 9.
PermutationGroup find_automorphisms(const StabilizerCode &code, const AutomorphismOptions &options = {});

struct SyndromeOrbits {
    std::vector<std::vector<uint64_t>> orbits;
    /// Cases where a permuted correction is not the table's correction.
    std::vector<std::string> violations;
};

SyndromeOrbits syndrome_orbits(const DecoderTable &table, const PermutationGroup &group);

struct OrbitChannelCheck {
    /// Largest Kraus coefficient difference inside any orbit.
    double max_deviation = 0;
    bool equal = false;
    /// Number of different conditional channels over all syndromes.
    size_t distinct_channels = 0;
};

OrbitChannelCheck verify_orbit_channels(const DecoderTable &table, const SyndromeOrbits &orbits,
                                        const UnitaryNoise &noise, double tol = 1e-12);

std::string to_string(const Permutation &perm);

}  // namespace cqec
