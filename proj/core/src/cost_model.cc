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

#include "hessco/cost_model.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "hessco/error.h"

namespace hessco {
namespace {

struct Rates {
  double npv;
  double discount;
  double annual;
  double tau;
};

Rates RatesOf(const Horizon& h) {
  return {NpvFactor(h.years, h.discount_rate),
          DiscountFactor(h.years, h.discount_rate), h.AnnualizationFactor(),
          h.TauHours()};
}

// Key for attributing cost terms; the objective constant uses "constant".
using Attribution = std::map<std::string, double>;

CostBreakdown Recompute(const DesignModel& model, const DesignProblem& problem,
                        std::span<const double> x, Attribution* by_kind) {
  const Rates r = RatesOf(problem.horizon);
  const GridSpec& grid = problem.sources.grid;
  const PvSpec& pv = problem.sources.pv;
  const VariableRegistry& vars = model.vars;
  Attribution local;
  Attribution& part = by_kind != nullptr ? *by_kind : local;
  auto value = [&](VarKind kind, const std::string& entity, int step = -1) {
    return x[vars.At(kind, entity, step)];
  };

  CostBreakdown b;
  b.grid_power = value(VarKind::kSourceCapacity, kGrid);
  b.pv_power = value(VarKind::kSourceCapacity, kPv);

  double buy = 0.0;
  double sell = 0.0;
  for (int k = 0; k < model.steps; ++k) {
    const double imp = value(VarKind::kSourcePlus, kGrid, k);
    const double exp = value(VarKind::kSourceMinus, kGrid, k);
    const double price = problem.profiles.price[k];
    b.energy_purchased += r.tau * imp;
    b.energy_sold += r.tau * exp;
    buy += r.tau * price * imp;
    sell += r.tau * grid.f_sell * price * exp;
    b.peak_import = std::max(b.peak_import, imp);
  }
  b.energy_cost_yearly = r.annual * (buy - sell);
  part[KindName(VarKind::kSourcePlus)] += r.npv * r.annual * buy;
  part[KindName(VarKind::kSourceMinus)] -= r.npv * r.annual * sell;

  b.grid_conn = grid.conn_fixed;
  b.grid_tran = grid.tran_fixed;
  b.grid_var = grid.var_per_mw * b.grid_power;
  b.grid_peak = grid.peak_per_mw * b.peak_import;
  part["constant"] += r.npv * (b.grid_conn + b.grid_tran);
  part[KindName(VarKind::kPeakImport)] += r.npv * b.grid_peak;

  b.pv_capex = pv.cost_per_mw * b.pv_power;
  b.pv_om_yearly = pv.om_per_mw_yr * b.pv_power;
  b.pv_resale = r.discount * pv.resale_factor * pv.cost_per_mw * b.pv_power;
  part[KindName(VarKind::kSourceCapacity)] +=
      b.pv_capex + r.npv * (b.pv_om_yearly + b.grid_var) - b.pv_resale;

  double storage_om = 0.0;
  for (const EssSpec& e : problem.storage) {
    EssCost c;
    c.name = e.name;
    c.energy_mwh = value(VarKind::kEnergyCapacity, e.name);
    c.power_mw = value(VarKind::kEssPowerCapacity, e.name);
    for (int k = 0; k < model.steps; ++k) {
      c.throughput_mwh += value(VarKind::kSwing, e.name, k);
    }
    c.capex = std::max(e.cost_energy * c.energy_mwh, e.cost_power * c.power_mw);
    const double om_power = e.om_power * c.power_mw;
    const double om_energy = r.annual * e.om_energy * c.throughput_mwh;
    c.om_yearly = om_power + om_energy;
    const double resale_energy =
        r.discount * e.resale_factor * e.cost_energy * c.energy_mwh;
    const double resale_wear = r.discount * e.resale_factor * e.cost_energy *
                               c.throughput_mwh / e.cycle_life;
    c.resale = resale_energy - resale_wear;
    storage_om += c.om_yearly;
    b.capex += c.capex;
    b.eol_value += c.resale;
    part[KindName(VarKind::kCapexEpigraph)] += c.capex;
    part[KindName(VarKind::kEssPowerCapacity)] += r.npv * om_power;
    part[KindName(VarKind::kEnergyCapacity)] -= resale_energy;
    part[KindName(VarKind::kThroughput)] += r.npv * om_energy + resale_wear;
    b.storage.push_back(std::move(c));
  }

  b.capex += b.pv_capex;
  b.eol_value += b.pv_resale;
  b.opex_yearly = b.energy_cost_yearly + storage_om + b.pv_om_yearly +
                  b.grid_conn + b.grid_tran + b.grid_var + b.grid_peak;
  b.opex_npv = r.npv * b.opex_yearly;
  b.total = b.capex + b.opex_npv - b.eol_value;
  return b;
}

}  // namespace

double NpvFactor(int years, double rate) {
  double sum = 0.0;
  for (int y = 1; y <= years; ++y) sum += std::pow(1.0 + rate, -y);
  return sum;
}

double DiscountFactor(int years, double rate) {
  return std::pow(1.0 + rate, -years);
}

void AddCapexObjective(DesignModel& model, const DesignProblem& problem) {
  ModelInstance& lp = model.lp;
  const VariableRegistry& vars = model.vars;
  for (const EssSpec& e : problem.storage) {
    const int cap = vars.At(VarKind::kCapexEpigraph, e.name);
    const std::string tag = "[" + SafeName(e.name) + "]";
    lp.AddRow("capex_energy" + tag, RowFamily::kCapex, Sense::kGreaterEqual,
              0.0,
              {{cap, 1.0},
               {vars.At(VarKind::kEnergyCapacity, e.name), -e.cost_energy}});
    lp.AddRow("capex_power" + tag, RowFamily::kCapex, Sense::kGreaterEqual,
              0.0,
              {{cap, 1.0},
               {vars.At(VarKind::kEssPowerCapacity, e.name), -e.cost_power}});
    lp.AddObjective(cap, 1.0);
  }
  lp.AddObjective(vars.At(VarKind::kSourceCapacity, kPv),
                  problem.sources.pv.cost_per_mw);
}

void AddOpexObjective(DesignModel& model, const DesignProblem& problem) {
  const Rates r = RatesOf(problem.horizon);
  const GridSpec& grid = problem.sources.grid;
  ModelInstance& lp = model.lp;
  const VariableRegistry& vars = model.vars;
  const double energy = r.npv * r.annual * r.tau;
  for (int k = 0; k < model.steps; ++k) {
    const double price = problem.profiles.price[k];
    lp.AddObjective(vars.At(VarKind::kSourcePlus, kGrid, k), energy * price);
    lp.AddObjective(vars.At(VarKind::kSourceMinus, kGrid, k),
                    -energy * grid.f_sell * price);
  }
  for (const EssSpec& e : problem.storage) {
    lp.AddObjective(vars.At(VarKind::kEssPowerCapacity, e.name),
                    r.npv * e.om_power);
    lp.AddObjective(vars.At(VarKind::kThroughput, e.name),
                    r.npv * r.annual * e.om_energy);
  }
  lp.AddObjective(vars.At(VarKind::kSourceCapacity, kPv),
                  r.npv * problem.sources.pv.om_per_mw_yr);
  lp.AddObjective(vars.At(VarKind::kSourceCapacity, kGrid),
                  r.npv * grid.var_per_mw);
  lp.AddObjective(vars.At(VarKind::kPeakImport, kGrid),
                  r.npv * grid.peak_per_mw);
  lp.AddObjectiveConstant(r.npv * (grid.conn_fixed + grid.tran_fixed));
}

void AddResaleObjective(DesignModel& model, const DesignProblem& problem) {
  const double d = DiscountFactor(problem.horizon.years,
                                  problem.horizon.discount_rate);
  ModelInstance& lp = model.lp;
  const VariableRegistry& vars = model.vars;
  for (const EssSpec& e : problem.storage) {
    const double value = d * e.resale_factor * e.cost_energy;
    lp.AddObjective(vars.At(VarKind::kEnergyCapacity, e.name), -value);
    lp.AddObjective(vars.At(VarKind::kThroughput, e.name),
                    value / e.cycle_life);
  }
  const PvSpec& pv = problem.sources.pv;
  lp.AddObjective(vars.At(VarKind::kSourceCapacity, kPv),
                  -d * pv.resale_factor * pv.cost_per_mw);
}

CostBreakdown ComputeBreakdown(const DesignModel& model,
                               const DesignProblem& problem,
                               std::span<const double> x) {
  return Recompute(model, problem, x, nullptr);
}

CostBreakdown Audit(const DesignModel& model, const DesignProblem& problem,
                    std::span<const double> x, double objective) {
  Attribution audit;
  CostBreakdown b = Recompute(model, problem, x, &audit);
  const double tolerance = 1e-6 * std::max(std::abs(objective), 1.0);
  if (std::abs(b.total - objective) <= tolerance) return b;

  Attribution row;
  row["constant"] = model.lp.objective_constant();
  for (int j = 0; j < model.lp.num_columns(); ++j) {
    row[KindName(model.vars.ref(j).kind)] += model.lp.objective(j) * x[j];
  }
  for (const auto& [kind, v] : audit) row.try_emplace(kind, 0.0);
  char buffer[160];
  std::snprintf(buffer, sizeof buffer,
                "objective audit failure: recomputed %.10g, solver %.10g",
                b.total, objective);
  std::string message = buffer;
  for (const auto& [kind, v] : row) {
    const auto it = audit.find(kind);
    const double delta = (it == audit.end() ? 0.0 : it->second) - v;
    if (std::abs(delta) > 1e-9 * std::max(std::abs(objective), 1.0)) {
      std::snprintf(buffer, sizeof buffer, "; %s delta %.6g", kind.c_str(),
                    delta);
      message += buffer;
    }
  }
  throw AuditError(message);
}

}  // namespace hessco
