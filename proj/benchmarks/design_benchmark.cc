// Copyright 2026 The hessco Authors
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

#include <benchmark/benchmark.h>

#include <sstream>

#include "hessco/catalog.h"
#include "hessco/dataset.h"
#include "hessco/model_builder.h"
#include "hessco/mps.h"
#include "hessco/scenario.h"
#include "hessco/simplex.h"

namespace {

using namespace hessco;

// Case-study economics on the first `days` demo days with all storages.
DesignProblem Problem(int days) {
  DesignProblem p;
  p.horizon = CaseStudyHorizon();
  p.horizon.synthetic_days = days;
  p.sources = CaseStudySources();
  p.storage = CaseStudyCatalog().entries();
  p.profiles = ProfilesFromDays(MakeDemoDataset(7, days));
  return p;
}

void BM_BuildModel(benchmark::State& state) {
  const DesignProblem p = Problem(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    DesignModel m = BuildDesignModel(p);
    benchmark::DoNotOptimize(m.lp.num_rows());
  }
  state.counters["steps"] = p.horizon.Steps();
}
BENCHMARK(BM_BuildModel)->Arg(7)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_Solve(benchmark::State& state) {
  const DesignModel m = BuildDesignModel(Problem(static_cast<int>(state.range(0))));
  long iterations = 0;
  for (auto _ : state) {
    const Solution s = Solve(m.lp);
    iterations = s.iterations;
    benchmark::DoNotOptimize(s.objective);
  }
  state.counters["rows"] = m.lp.num_rows();
  state.counters["pivots"] = static_cast<double>(iterations);
}
BENCHMARK(BM_Solve)->Arg(2)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_WriteMps(benchmark::State& state) {
  const DesignModel m = BuildDesignModel(Problem(30));
  for (auto _ : state) {
    std::ostringstream out;
    WriteMps(m.lp, out);
    benchmark::DoNotOptimize(out.str().size());
  }
}
BENCHMARK(BM_WriteMps)->Unit(benchmark::kMillisecond);

void BM_BuildScenario(benchmark::State& state) {
  const std::vector<HistoricalDay> days = MakeDemoDataset(7, 365);
  for (auto _ : state) {
    ScenarioModel s = BuildScenario(days, 20, 30, 1);
    benchmark::DoNotOptimize(s.objective);
  }
}
BENCHMARK(BM_BuildScenario)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
