// Copyright 2026 The qmorse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference vs OpenMP sweep kernel on the figure presets.

#include <benchmark/benchmark.h>

#include "qmorse/sweep.hpp"

namespace {

void run(benchmark::State& state, const char* id, bool parallel) {
  const qmorse::FigurePreset preset = qmorse::figure_preset(id, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto records = parallel ? qmorse::run_sweep_parallel(preset.grid, preset.cycle, qmorse::Method::kBoth, 0)
                            : qmorse::run_sweep_serial(preset.grid, preset.cycle, qmorse::Method::kBoth);
    benchmark::DoNotOptimize(records.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

void BM_CarnotSerial(benchmark::State& s) { run(s, "fig2", false); }
void BM_CarnotParallel(benchmark::State& s) { run(s, "fig2", true); }
void BM_OttoWidthSerial(benchmark::State& s) { run(s, "fig4", false); }
void BM_OttoWidthParallel(benchmark::State& s) { run(s, "fig4", true); }

}  // namespace

BENCHMARK(BM_CarnotSerial)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CarnotParallel)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OttoWidthSerial)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OttoWidthParallel)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
