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

// Serial reference vs OpenMP kernels. The first range argument selects the
// engine (0 = serial reference, 1 = parallel).

#include <benchmark/benchmark.h>

#include <map>
#include <string>

#include "cqec/channel.h"
#include "cqec/metrics.h"

using namespace cqec;

namespace {

Exec exec_of(const benchmark::State &state) {
    return state.range(0) == 0 ? Exec::serial_reference : Exec::parallel;
}

const DecoderTable &table(const char *name, DecoderKind kind) {
    static std::map<std::pair<std::string, DecoderKind>, DecoderTable> cache;
    auto key = std::pair{std::string(name), kind};
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, DecoderTable::build(catalog_code(name), {kind, TieBreak::lexicographic})).first;
    }
    return it->second;
}

void BM_EffectiveUnitary(benchmark::State &state, const char *code) {
    const DecoderTable &t = table(code, DecoderKind::symmetric);
    UnitaryNoise noise = UnitaryNoise::uniform(t.code().n(), 0.1, Axis::from_components(0.3, -0.5, 0.81));
    for (auto _ : state) {
        benchmark::DoNotOptimize(effective_unitary(t, noise, exec_of(state)));
    }
}

void BM_EffectiveUnitaryFactored(benchmark::State &state, const char *code) {
    const DecoderTable &t = table(code, DecoderKind::symmetric);
    UnitaryNoise noise = UnitaryNoise::uniform(t.code().n(), 0.1, Axis::from_components(0.3, -0.5, 0.81));
    for (auto _ : state) {
        benchmark::DoNotOptimize(effective_unitary_factored(t, noise));
    }
}

void BM_ModelNumeric(benchmark::State &state, const char *code) {
    const DecoderTable &t = table(code, DecoderKind::z_only);
    ModelNoise noise = ModelNoise::uniform(t.code().n(), model_from_p_theta(0.02, 0.1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(effective_model_numeric(t, noise, exec_of(state)));
    }
}

void BM_ModelSymbolic(benchmark::State &state, const char *code) {
    const DecoderTable &t = table(code, DecoderKind::z_only);
    for (auto _ : state) {
        benchmark::DoNotOptimize(effective_model_symbolic(t, exec_of(state)));
    }
}

void BM_DiamondOptimizer(benchmark::State &state) {
    const DecoderTable &t = table("steane", DecoderKind::symmetric);
    LogicalChannel ch =
        effective_unitary(t, UnitaryNoise::uniform(7, 0.2, Axis::from_components(1, 2, 3))).channel();
    for (auto _ : state) {
        benchmark::DoNotOptimize(diamond_distance(ch));
    }
}

}  // namespace

BENCHMARK_CAPTURE(BM_EffectiveUnitary, steane, "steane")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_EffectiveUnitary, shor, "shor")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_EffectiveUnitaryFactored, shor, "shor")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_EffectiveUnitaryFactored, surface_16, "surface_16_1_4")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ModelNumeric, shor, "shor")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ModelSymbolic, steane, "steane")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ModelSymbolic, surface_16, "surface_16_1_4")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiamondOptimizer)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
