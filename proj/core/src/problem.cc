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

#include "hessco/problem.h"

#include <cmath>

#include "hessco/error.h"

namespace hessco {
namespace {

void Append(Profiles& p, const HistoricalDay& d) {
  p.price.insert(p.price.end(), d.price.begin(), d.price.end());
  p.demand_ch.insert(p.demand_ch.end(), d.demand_ch.begin(), d.demand_ch.end());
  p.demand_wh.insert(p.demand_wh.end(), d.demand_wh.begin(), d.demand_wh.end());
  p.pv_cf.insert(p.pv_cf.end(), d.pv_cf.begin(), d.pv_cf.end());
}

}  // namespace

Profiles ProfilesFromScenario(const ScenarioModel& scenario,
                              const std::vector<HistoricalDay>& days) {
  Profiles p;
  for (int index : scenario.SyntheticDays()) {
    if (index < 0 || index >= static_cast<int>(days.size())) {
      throw ConfigError("scenario refers to day " + std::to_string(index) +
                        " outside the dataset");
    }
    Append(p, days[index]);
  }
  return p;
}

Profiles ProfilesFromDays(const std::vector<HistoricalDay>& days) {
  Profiles p;
  for (const HistoricalDay& d : days) Append(p, d);
  return p;
}

void DesignProblem::Validate() const {
  horizon.Validate();
  sources.Validate();
  demand.Validate();
  const auto k = static_cast<std::size_t>(horizon.Steps());
  if (profiles.price.size() != k || profiles.demand_ch.size() != k ||
      profiles.demand_wh.size() != k || profiles.pv_cf.size() != k) {
    throw ConfigError("profiles must have " + std::to_string(k) +
                      " steps, got " + std::to_string(profiles.price.size()));
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!std::isfinite(profiles.price[i]) || profiles.demand_ch[i] < 0.0 ||
        profiles.demand_wh[i] < 0.0 || profiles.pv_cf[i] < 0.0 ||
        profiles.pv_cf[i] > 1.0) {
      throw ValidationError("profiles: invalid value at step " +
                            std::to_string(i));
    }
  }
  for (std::size_t i = 0; i < storage.size(); ++i) {
    storage[i].Validate();
    for (std::size_t j = 0; j < i; ++j) {
      if (storage[i].name == storage[j].name) {
        throw ConfigError("storage '" + storage[i].name + "' listed twice");
      }
    }
  }
  auto check_fixed = [&](const std::map<std::string, double>& m,
                         const char* what) {
    for (const auto& [name, value] : m) {
      bool known = false;
      for (const EssSpec& e : storage) known = known || e.name == name;
      if (!known) {
        throw ConfigError(std::string("fixed ") + what +
                          " for unknown storage '" + name + "'");
      }
      if (!std::isfinite(value) || value < 0.0) {
        throw ConfigError(std::string("fixed ") + what + " must be >= 0");
      }
    }
  };
  check_fixed(fixed.ess_energy, "energy");
  check_fixed(fixed.ess_power, "power");
}

double DesignProblem::BusDemand(int k) const {
  return profiles.demand_ch[k] / demand.eta_charging +
         profiles.demand_wh[k] / demand.eta_warehouse;
}

}  // namespace hessco
