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

#ifndef HESSCO_EXPERIMENT_H_
#define HESSCO_EXPERIMENT_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hessco/catalog.h"
#include "hessco/cost_model.h"
#include "hessco/dataset.h"
#include "hessco/problem.h"
#include "hessco/scenario.h"
#include "hessco/simplex.h"

namespace hessco {

// One row of the experiment matrix.
struct ExperimentConfig {
  std::string id;
  std::vector<std::string> ess;  // catalog names
  FixedSizing fixed;
  // Per-experiment parameter overrides.
  std::optional<double> f_sell;
  std::optional<int> years;
  std::optional<double> discount_rate;
};

// Everything a run needs, usually read from one JSON file. Relative paths
// are resolved against the file's directory.
struct RunConfig {
  // Either the three CSV files or the bundled demo generator.
  std::optional<DatasetFiles> files;
  std::uint64_t demo_seed = 1;
  int demo_days = 120;

  std::string catalog_path;  // empty: built-in case-study catalog
  Horizon horizon;
  int clusters = 20;
  std::uint64_t seed = 1;
  SourceSpec sources;
  DemandSpec demand;
  SolverOptions solver;
  std::vector<ExperimentConfig> experiments;
  // Directory for cached scenarios; empty disables caching.
  std::string cache_dir;
};

// Throws ConfigError (unknown keys, bad values) or ParseError (bad JSON).
RunConfig ParseRunConfig(const std::string& json_text,
                         const std::string& base_dir = ".");
RunConfig LoadRunConfig(const std::string& path);
// Case-study parameters, demo data, the four storage subsets of the
// case-study comparison ({B}, {B,S}, {B,F}, {B,S,F}).
RunConfig DefaultRunConfig();

// Data shared by all experiments of a run.
struct Workspace {
  Catalog catalog;
  std::vector<HistoricalDay> days;
  std::vector<std::string> warnings;
  ScenarioModel scenario;
  Profiles profiles;
  bool scenario_from_cache = false;
};

// Loads data and catalog and builds (or reads from the cache) the
// scenario keyed by (data hash, clusters, synthetic days, seed).
Workspace PrepareWorkspace(const RunConfig& config);
std::string ScenarioCachePath(const RunConfig& config,
                              const std::vector<HistoricalDay>& days);

DesignProblem MakeProblem(const RunConfig& config, const Workspace& workspace,
                          const ExperimentConfig& experiment);

// Per-step series for plotting.
struct Trace {
  std::string series;
  std::vector<double> values;
};

struct DesignResult {
  std::string id;
  std::vector<std::string> ess;
  std::string status;  // a StatusName or "error"
  std::string message;
  double objective = 0.0;
  long iterations = 0;
  double seconds = 0.0;
  int rows = 0;
  int columns = 0;
  double max_row_violation = 0.0;
  double complementarity_max = 0.0;
  CostBreakdown cost;
  std::vector<Trace> traces;

  bool ok() const { return status == "optimal"; }
};

// Builds, solves, verifies and audits one experiment. Never throws:
// failures are reported in `status` and `message`.
DesignResult RunExperiment(const RunConfig& config, const Workspace& workspace,
                           const ExperimentConfig& experiment);
// Runs on up to `jobs` threads; the result order follows experiment id.
std::vector<DesignResult> RunExperiments(const RunConfig& config,
                                         const Workspace& workspace,
                                         int jobs = 1);

// Long-format CSV with header `step,series,value`: P_CH, P_WH, P_G (net
// bus side), P_PV (bus side), then P_<ess> (net discharge) and E_<ess>
// for every storage, for each step.
void EmitTraces(const DesignResult& result, std::ostream& out);
void EmitTraces(const DesignResult& result, const std::string& path);

// Columns: exp_id,e_max_mwh,p_max_mw,p_grid_mw,p_pv_mw,total_keur,
// capex_keur,opex_keur,eol_keur,e_sold_mwh,e_purchased_mwh,status.
// Storage sizes are "[x;y;z]" in catalog order, zero for unused entries.
std::string SummaryCsv(const std::vector<DesignResult>& results,
                       const Catalog& catalog);
std::string ResultsJson(const std::vector<DesignResult>& results,
                        const Workspace& workspace);
std::string BreakdownJson(const CostBreakdown& cost);

}  // namespace hessco

#endif  // HESSCO_EXPERIMENT_H_
