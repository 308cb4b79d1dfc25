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

#ifndef HESSCO_PROBLEM_H_
#define HESSCO_PROBLEM_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hessco/scenario.h"
#include "hessco/types.h"

namespace hessco {

// Per-step input series over the whole optimisation period.
struct Profiles {
  std::vector<double> price;      // k€/MWh
  std::vector<double> demand_ch;  // MW
  std::vector<double> demand_wh;  // MW
  std::vector<double> pv_cf;      // fraction

  int size() const { return static_cast<int>(price.size()); }
};

// Concatenates the representative day chosen for every synthetic day.
Profiles ProfilesFromScenario(const ScenarioModel& scenario,
                              const std::vector<HistoricalDay>& days);
// Concatenates `days` in order.
Profiles ProfilesFromDays(const std::vector<HistoricalDay>& days);

// Design variables pinned to a value instead of being optimised.
struct FixedSizing {
  std::optional<double> grid_power;
  std::optional<double> pv_power;
  std::map<std::string, double> ess_energy;
  std::map<std::string, double> ess_power;
};

// Everything the model builder and the audit need.
struct DesignProblem {
  Horizon horizon;
  SourceSpec sources;
  DemandSpec demand;
  std::vector<EssSpec> storage;
  Profiles profiles;
  FixedSizing fixed;

  // Throws ValidationError / ConfigError.
  void Validate() const;
  // Bus-side demand at step k: sum over categories of P_d,k / eta_d.
  double BusDemand(int k) const;
};

}  // namespace hessco

#endif  // HESSCO_PROBLEM_H_
