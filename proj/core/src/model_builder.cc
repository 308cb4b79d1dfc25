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

#include "hessco/model_builder.h"

#include <cmath>
#include <stdexcept>

#include "hessco/cost_model.h"
#include "hessco/error.h"

namespace hessco {
namespace {

constexpr double kInf = HUGE_VAL;

std::string StepName(const char* prefix, const std::string& entity, int k) {
  return std::string(prefix) + "[" + SafeName(entity) + "," +
         std::to_string(k) + "]";
}

}  // namespace

SoeCoefficients StorageCoefficients(const EssSpec& ess, double tau_hours) {
  return {-tau_hours / ess.eta_discharge, tau_hours * ess.eta_charge};
}

ModelBuilder::ModelBuilder(const DesignProblem& problem) : problem_(problem) {
  problem_.Validate();
  model_.steps = problem_.horizon.Steps();
}

void ModelBuilder::RegisterVariables() {
  if (registered_) throw std::logic_error("variables already registered");
  registered_ = true;
  ModelInstance& lp = model_.lp;
  VariableRegistry& vars = model_.vars;
  const int steps = model_.steps;
  const GridSpec& grid = problem_.sources.grid;
  const PvSpec& pv = problem_.sources.pv;
  const FixedSizing& fixed = problem_.fixed;

  auto design_bounds = [](std::optional<double> pin, double ceiling,
                          const std::string& what) {
    if (!pin) return std::make_pair(0.0, ceiling);
    if (*pin < 0.0 || *pin > ceiling) {
      throw ConfigError("fixed " + what + " outside [0, " +
                        std::to_string(ceiling) + "]");
    }
    return std::make_pair(*pin, *pin);
  };

  const auto [g_lo, g_hi] =
      design_bounds(fixed.grid_power, grid.power_ceiling, "grid power");
  vars.Register(lp, VarKind::kSourceCapacity, kGrid, -1, g_lo, g_hi);
  const auto [pv_lo, pv_hi] =
      design_bounds(fixed.pv_power, pv.power_ceiling, "PV power");
  vars.Register(lp, VarKind::kSourceCapacity, kPv, -1, pv_lo, pv_hi);
  vars.Register(lp, VarKind::kPeakImport, kGrid, -1, 0.0, kInf);

  for (const EssSpec& e : problem_.storage) {
    auto pin = [](const std::map<std::string, double>& m,
                  const std::string& name) -> std::optional<double> {
      const auto it = m.find(name);
      if (it == m.end()) return std::nullopt;
      return it->second;
    };
    const auto [e_lo, e_hi] = design_bounds(
        pin(fixed.ess_energy, e.name), e.energy_ceiling, e.name + " energy");
    vars.Register(lp, VarKind::kEnergyCapacity, e.name, -1, e_lo, e_hi);
    const auto [p_lo, p_hi] = design_bounds(
        pin(fixed.ess_power, e.name), e.power_ceiling, e.name + " power");
    vars.Register(lp, VarKind::kEssPowerCapacity, e.name, -1, p_lo, p_hi);
    vars.Register(lp, VarKind::kCapexEpigraph, e.name, -1, 0.0, kInf);
    vars.Register(lp, VarKind::kThroughput, e.name, -1, 0.0, kInf);
  }

  for (int k = 0; k < steps; ++k) {
    vars.Register(lp, VarKind::kSourcePlus, kGrid, k, 0.0,
                  grid.power_ceiling / grid.eta_import);
    vars.Register(lp, VarKind::kSourceMinus, kGrid, k, 0.0,
                  grid.power_ceiling * grid.eta_export);
    vars.Register(lp, VarKind::kPvOutput, kPv, k, 0.0, pv.power_ceiling);
    for (const EssSpec& e : problem_.storage) {
      vars.Register(lp, VarKind::kEssPlus, e.name, k, 0.0, e.power_ceiling);
      vars.Register(lp, VarKind::kEssMinus, e.name, k, 0.0, e.power_ceiling);
      vars.Register(lp, VarKind::kStateOfEnergy, e.name, k, 0.0,
                    e.energy_ceiling);
      vars.Register(lp, VarKind::kCRate, e.name, k, 0.0, e.crate_ceiling);
      vars.Register(lp, VarKind::kSwing, e.name, k, 0.0,
                    e.energy_ceiling * e.crate_ceiling);
    }
  }
  for (const EssSpec& e : problem_.storage) {
    vars.Register(lp, VarKind::kStateOfEnergy, e.name, steps, 0.0,
                  e.energy_ceiling);
  }
}

void ModelBuilder::AddSourceFlows() {
  ModelInstance& lp = model_.lp;
  const int pv_max = Var(VarKind::kSourceCapacity, kPv);
  for (int k = 0; k < model_.steps; ++k) {
    lp.AddRow(StepName("pv_avail", kPv, k), RowFamily::kSourceLimit,
              Sense::kLessEqual, 0.0,
              {{Var(VarKind::kPvOutput, kPv, k), 1.0},
               {pv_max, -problem_.profiles.pv_cf[k]}});
  }
}

void ModelBuilder::AddBalance() {
  ModelInstance& lp = model_.lp;
  const GridSpec& grid = problem_.sources.grid;
  for (int k = 0; k < model_.steps; ++k) {
    std::vector<Term> terms = {
        {Var(VarKind::kSourcePlus, kGrid, k), grid.eta_import},
        {Var(VarKind::kSourceMinus, kGrid, k), -1.0 / grid.eta_export},
        {Var(VarKind::kPvOutput, kPv, k), problem_.sources.pv.eta},
    };
    for (const EssSpec& e : problem_.storage) {
      terms.push_back({Var(VarKind::kEssPlus, e.name, k), 1.0});
      terms.push_back({Var(VarKind::kEssMinus, e.name, k), -1.0});
    }
    lp.AddRow("balance[" + std::to_string(k) + "]", RowFamily::kBalance,
              Sense::kEqual, problem_.BusDemand(k), std::move(terms));
  }
}

void ModelBuilder::AddCapacityBounds() {
  ModelInstance& lp = model_.lp;
  const GridSpec& grid = problem_.sources.grid;
  const int grid_max = Var(VarKind::kSourceCapacity, kGrid);
  for (int k = 0; k < model_.steps; ++k) {
    lp.AddRow(StepName("grid_in", kGrid, k), RowFamily::kSourceLimit,
              Sense::kLessEqual, 0.0,
              {{Var(VarKind::kSourcePlus, kGrid, k), grid.eta_import},
               {grid_max, -1.0}});
    lp.AddRow(StepName("grid_out", kGrid, k), RowFamily::kSourceLimit,
              Sense::kLessEqual, 0.0,
              {{Var(VarKind::kSourceMinus, kGrid, k), 1.0 / grid.eta_export},
               {grid_max, -1.0}});
  }
  for (const EssSpec& e : problem_.storage) {
    const int p_max = Var(VarKind::kEssPowerCapacity, e.name);
    const int e_max = Var(VarKind::kEnergyCapacity, e.name);
    for (int k = 0; k < model_.steps; ++k) {
      lp.AddRow(StepName("dis_lim", e.name, k), RowFamily::kStorageLimit,
                Sense::kLessEqual, 0.0,
                {{Var(VarKind::kEssPlus, e.name, k), 1.0}, {p_max, -1.0}});
      lp.AddRow(StepName("chg_lim", e.name, k), RowFamily::kStorageLimit,
                Sense::kLessEqual, 0.0,
                {{Var(VarKind::kEssMinus, e.name, k), 1.0}, {p_max, -1.0}});
    }
    for (int k = 0; k <= model_.steps; ++k) {
      lp.AddRow(StepName("soe_max", e.name, k), RowFamily::kStorageLimit,
                Sense::kLessEqual, 0.0,
                {{Var(VarKind::kStateOfEnergy, e.name, k), 1.0},
                 {e_max, -1.0}});
    }
  }
}

void ModelBuilder::AddEssDynamics() {
  ModelInstance& lp = model_.lp;
  const double tau = problem_.horizon.TauHours();
  const int steps = model_.steps;
  for (const EssSpec& e : problem_.storage) {
    const SoeCoefficients c = StorageCoefficients(e, tau);
    for (int k = 0; k < steps; ++k) {
      lp.AddRow(StepName("soe", e.name, k), RowFamily::kDynamics,
                Sense::kEqual, 0.0,
                {{Var(VarKind::kStateOfEnergy, e.name, k + 1), 1.0},
                 {Var(VarKind::kStateOfEnergy, e.name, k), -1.0},
                 {Var(VarKind::kEssPlus, e.name, k), -c.discharge},
                 {Var(VarKind::kEssMinus, e.name, k), -c.charge}});
    }
    if (e.dod_min_fraction > 0.0) {
      const int e_max = Var(VarKind::kEnergyCapacity, e.name);
      for (int k = 0; k <= steps; ++k) {
        lp.AddRow(StepName("dod", e.name, k), RowFamily::kStorageLimit,
                  Sense::kGreaterEqual, 0.0,
                  {{Var(VarKind::kStateOfEnergy, e.name, k), 1.0},
                   {e_max, -e.dod_min_fraction}});
      }
    }
    lp.AddRow("periodic[" + SafeName(e.name) + "]", RowFamily::kPeriodicity,
              Sense::kGreaterEqual, 0.0,
              {{Var(VarKind::kStateOfEnergy, e.name, steps), 1.0},
               {Var(VarKind::kStateOfEnergy, e.name, 0), -1.0}});
  }
}

void ModelBuilder::AddCrateMcCormick() {
  ModelInstance& lp = model_.lp;
  for (const EssSpec& e : problem_.storage) {
    const double e_ceiling = e.energy_ceiling;
    const double r_ceiling = e.crate_ceiling;
    if (!(e_ceiling > 0.0) || !(r_ceiling > 0.0)) {
      throw ConfigError("storage '" + e.name +
                        "': McCormick envelope needs positive energy and "
                        "C-rate ceilings");
    }
    const int e_max = Var(VarKind::kEnergyCapacity, e.name);
    for (int k = 0; k < model_.steps; ++k) {
      const int q = Var(VarKind::kSwing, e.name, k);
      const int r = Var(VarKind::kCRate, e.name, k);
      const int now = Var(VarKind::kStateOfEnergy, e.name, k);
      const int next = Var(VarKind::kStateOfEnergy, e.name, k + 1);
      lp.AddRow(StepName("swing_up", e.name, k), RowFamily::kAbsSwing,
                Sense::kGreaterEqual, 0.0,
                {{q, 1.0}, {next, -1.0}, {now, 1.0}});
      lp.AddRow(StepName("swing_dn", e.name, k), RowFamily::kAbsSwing,
                Sense::kGreaterEqual, 0.0,
                {{q, 1.0}, {next, 1.0}, {now, -1.0}});
      // q >= E^M R + E^max R^M - E^M R^M
      lp.AddRow(StepName("mcc_lo", e.name, k), RowFamily::kMcCormick,
                Sense::kGreaterEqual, -e_ceiling * r_ceiling,
                {{q, 1.0}, {r, -e_ceiling}, {e_max, -r_ceiling}});
      // q <= E^M R
      lp.AddRow(StepName("mcc_hi_r", e.name, k), RowFamily::kMcCormick,
                Sense::kLessEqual, 0.0, {{q, 1.0}, {r, -e_ceiling}});
      // q <= E^max R^M
      lp.AddRow(StepName("mcc_hi_e", e.name, k), RowFamily::kMcCormick,
                Sense::kLessEqual, 0.0, {{q, 1.0}, {e_max, -r_ceiling}});
    }
  }
}

void ModelBuilder::AddThroughput() {
  ModelInstance& lp = model_.lp;
  for (const EssSpec& e : problem_.storage) {
    std::vector<Term> terms = {{Var(VarKind::kThroughput, e.name), 1.0}};
    for (int k = 0; k < model_.steps; ++k) {
      terms.push_back({Var(VarKind::kSwing, e.name, k), -1.0});
    }
    lp.AddRow("throughput[" + SafeName(e.name) + "]", RowFamily::kThroughput,
              Sense::kEqual, 0.0, std::move(terms));
  }
}

void ModelBuilder::AddPeakEpigraph() {
  ModelInstance& lp = model_.lp;
  const int peak = Var(VarKind::kPeakImport, kGrid);
  for (int k = 0; k < model_.steps; ++k) {
    lp.AddRow(StepName("peak", kGrid, k), RowFamily::kPeak,
              Sense::kGreaterEqual, 0.0,
              {{peak, 1.0}, {Var(VarKind::kSourcePlus, kGrid, k), -1.0}});
  }
}

DesignModel BuildDesignModel(const DesignProblem& problem) {
  ModelBuilder builder(problem);
  builder.RegisterVariables();
  builder.AddSourceFlows();
  builder.AddBalance();
  builder.AddCapacityBounds();
  builder.AddEssDynamics();
  builder.AddCrateMcCormick();
  builder.AddThroughput();
  builder.AddPeakEpigraph();
  AddCapexObjective(builder.model(), problem);
  AddOpexObjective(builder.model(), problem);
  AddResaleObjective(builder.model(), problem);
  DesignModel model = builder.Release();
  model.lp.set_name("hessco");
  model.lp.Validate();
  return model;
}

}  // namespace hessco
