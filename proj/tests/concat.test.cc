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

#include "cqec/concat.h"

#include <gtest/gtest.h>

#include <cmath>

#include "cqec/channel.h"

using namespace cqec;

namespace {

const PolyMap &steane_map() {
    static const PolyMap map =
        effective_model_symbolic(DecoderTable::build(catalog_code("steane"), {DecoderKind::z_only}));
    return map;
}

}  // namespace

TEST(Iterate, FixedPointAtZero) {
    Trajectory t = iterate(steane_map(), {0, 0});
    EXPECT_EQ(t.verdict, Verdict::converged_to_zero);
    EXPECT_EQ(t.iterations, 0u);
}

TEST(Iterate, DephasingBelowThresholdDecreases) {
    Trajectory t = iterate(steane_map(), {0.03, 0});
    EXPECT_EQ(t.verdict, Verdict::converged_to_zero);
    for (size_t i = 1; i < t.points.size(); i++) {
        EXPECT_LT(t.points[i].x, t.points[i - 1].x);
        EXPECT_EQ(t.points[i].y, 0);
    }
}

TEST(Iterate, CoherentAboveTrueThresholdDiverges) {
    // Below the one-level crossing but above the true threshold.
    Trajectory t = iterate(steane_map(), model_from_p_theta(0, 0.3));
    EXPECT_EQ(t.verdict, Verdict::diverged);
    EXPECT_EQ(iterate(steane_map(), model_from_p_theta(0, 0.19)).verdict, Verdict::converged_to_zero);
    EXPECT_EQ(iterate(steane_map(), model_from_p_theta(0, 0.20)).verdict, Verdict::diverged);
}

TEST(Iterate, RejectsNonCpStart) {
    EXPECT_THROW(iterate(steane_map(), {0.1, 0.4}), std::invalid_argument);
}

TEST(Threshold, Steane) {
    ThresholdResult coh = threshold(steane_map(), Family::coherent);
    EXPECT_TRUE(coh.bracketed);
    EXPECT_NEAR(coh.parameter, 0.1918, 5e-4);
    EXPECT_NEAR(coh.diamond, 0.1906, 5e-4);
    EXPECT_NEAR(coh.infidelity, 2.0 / 3.0 * std::pow(std::sin(coh.parameter), 2), 1e-15);
    ASSERT_TRUE(coh.has_pseudo);
    EXPECT_NEAR(coh.pseudo_parameter, 0.3276, 5e-4);
    EXPECT_NEAR(coh.pseudo_diamond, 0.3218, 5e-4);

    ThresholdResult inc = threshold(steane_map(), Family::incoherent);
    EXPECT_NEAR(inc.diamond, 0.0646, 5e-4);
    ASSERT_TRUE(inc.has_pseudo);
    EXPECT_NEAR(inc.pseudo_parameter, inc.parameter, 2e-5);
    EXPECT_GT(coh.diamond, inc.diamond);
}

TEST(Threshold, RepetitionThreeIncoherentAtHalf) {
    PolyMap map = effective_model_symbolic(DecoderTable::build(repetition_code(3), {DecoderKind::z_only}));
    ThresholdResult inc = threshold(map, Family::incoherent);
    EXPECT_NEAR(inc.diamond, 0.5, 1e-4);
}

TEST(Basin, GridAndVerdicts) {
    std::vector<BasinCell> cells = basin(steane_map(), 3, 5);
    ASSERT_EQ(cells.size(), 15u);
    EXPECT_EQ(cells[0].p, 0);
    EXPECT_EQ(cells[0].theta, 0);
    EXPECT_EQ(cells[0].verdict, Verdict::converged_to_zero);
    EXPECT_NEAR(cells[4].theta, M_PI / 4, 1e-15);
    EXPECT_NEAR(cells[14].p, 0.5, 1e-15);
    EXPECT_THROW(basin(steane_map(), 0, 3), std::invalid_argument);
    for (const auto &name : catalog_names()) {
        PolyMap map = effective_model_symbolic(DecoderTable::build(catalog_code(name), {DecoderKind::z_only}));
        EXPECT_EQ(iterate(map, {0.5, 0}).verdict, Verdict::diverged) << name;
    }
}

TEST(Family, Names) {
    EXPECT_EQ(parse_family("coherent"), Family::coherent);
    EXPECT_THROW(parse_family("mixed"), std::invalid_argument);
    EXPECT_EQ(to_string(Verdict::max_iter), "max_iter");
}
