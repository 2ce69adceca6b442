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

#include <string>
#include <vector>

#include "cqec/channel.h"

namespace cqec {

enum class Verdict { converged_to_zero, diverged, max_iter };
std::string to_string(Verdict v);

struct IterateOptions {
    size_t max_iter = 200;
    /// Converged once the diamond distance drops below this.
    double zero_tol = 1e-12;
    /// Diverged once the distance stays above max(D0, 0.999), or the orbit
    /// sits at a nonzero fixed point, this many consecutive levels.
    size_t persistence = 10;
    /// Step size below which the orbit counts as stationary.
    double stall_tol = 1e-15;
};

struct Trajectory {
    std::vector<ModelChannel> points;
    Verdict verdict = Verdict::max_iter;
    size_t iterations = 0;
};

Trajectory iterate(const PolyMap &map, ModelChannel start, const IterateOptions &options = {});

enum class Family {
    /// Pure rotations: p = 0, parameter theta.
    coherent,
    /// Pure dephasing: theta = 0, parameter p.
    incoherent,
};
Family parse_family(const std::string &text);
std::string to_string(Family f);
ModelChannel family_point(Family f, double parameter);

struct ThresholdOptions {
    IterateOptions iterate;
    size_t scan_points = 200;
    /// Final bisection bracket width in the family parameter.
    double bracket = 1e-5;
    /// Upper end of the threshold probe; 0 picks pi/4 (coherent) or 1/2
    /// (incoherent).
    double upper = 0;
    /// Upper end of the pseudothreshold scan; 0 picks pi/2 or 1.
    double pseudo_upper = 0;
    size_t pseudo_scan_points = 4000;
};

struct ThresholdResult {
    Family family = Family::coherent;
    /// Largest parameter whose iteration still converges to zero.
    double parameter = 0;
    double diamond = 0;
    double infidelity = 0;
    /// False when every probe point converged.
    bool bracketed = false;
    /// First crossing of D(f(x, y)) = D(x, y).
    bool has_pseudo = false;
    double pseudo_parameter = 0;
    double pseudo_diamond = 0;
    double pseudo_infidelity = 0;
};

/// Throws std::runtime_error when the converging parameters do not form an
/// interval starting at zero.
ThresholdResult threshold(const PolyMap &map, Family family, const ThresholdOptions &options = {});

struct BasinCell {
    double p = 0;
    double theta = 0;
    ModelChannel start;
    Verdict verdict = Verdict::max_iter;
    size_t iterations = 0;
};

/// Verdicts on an np x nt grid over p in [0, 1/2] and theta in [0, pi/4].
std::vector<BasinCell> basin(const PolyMap &map, size_t np, size_t nt, const IterateOptions &options = {});

}  // namespace cqec
