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

#include "cqec/channel.h"

namespace cqec {

struct DiamondOptions {
    /// Skip the closed form even for model-family channels.
    bool force_optimizer = false;
    int restarts = 24;
    /// Simplex size at which a local search stops.
    double tolerance = 1e-11;
    uint64_t seed = 20260101;
    int max_iterations = 4000;
};

struct DiamondResult {
    double value = 0;
    /// Largest minus smallest local optimum across restarts.
    double spread = 0;
    bool closed_form = false;
};

/// Half the diamond norm of (channel - identity), for k = 1.
DiamondResult diamond_distance(const LogicalChannel &channel, const DiamondOptions &options = {});
double diamond_distance(ModelChannel m);

/// Average gate infidelity.
double infidelity(const LogicalChannel &channel);
double infidelity(ModelChannel m);

struct ModelFit {
    ModelChannel model;
    /// Largest deviation of any r entry from the fitted model channel.
    double residual = 0;
};

/// Reads x = r(Z, Z) and y = i r(Z, I) off a k = 1 channel.
ModelFit fit_model(const LogicalChannel &channel);

}  // namespace cqec
