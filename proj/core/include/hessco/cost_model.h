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

#ifndef HESSCO_COST_MODEL_H_
#define HESSCO_COST_MODEL_H_

#include <span>
#include <string>
#include <vector>

#include "hessco/model_builder.h"
#include "hessco/problem.h"

namespace hessco {

// sum_{y=1..years} (1 + rate)^-y.
double NpvFactor(int years, double rate);
// (1 + rate)^-years.
double DiscountFactor(int years, double rate);

// Objective terms. Each adds coefficients to the LP objective of `model`;
// the capex term also adds the per-storage epigraph rows.
void AddCapexObjective(DesignModel& model, const DesignProblem& problem);
void AddOpexObjective(DesignModel& model, const DesignProblem& problem);
void AddResaleObjective(DesignModel& model, const DesignProblem& problem);

struct EssCost {
  std::string name;
  double energy_mwh = 0.0;
  double power_mw = 0.0;
  double throughput_mwh = 0.0;  // over the synthetic period
  double capex = 0.0;
  double om_yearly = 0.0;
  double resale = 0.0;  // discounted
};

// Every cost term recomputed from primal values. Money in k€; energies
// over the synthetic period.
struct CostBreakdown {
  double total = 0.0;
  double capex = 0.0;
  double opex_npv = 0.0;
  double opex_yearly = 0.0;
  double eol_value = 0.0;
  double energy_sold = 0.0;
  double energy_purchased = 0.0;
  double energy_cost_yearly = 0.0;

  double grid_power = 0.0;
  double pv_power = 0.0;
  double peak_import = 0.0;
  double grid_conn = 0.0;  // yearly
  double grid_tran = 0.0;  // yearly
  double grid_var = 0.0;   // yearly
  double grid_peak = 0.0;  // yearly
  double pv_capex = 0.0;
  double pv_om_yearly = 0.0;
  double pv_resale = 0.0;  // discounted
  std::vector<EssCost> storage;
};

// Recomputes the cost terms from `x` without reading the objective row:
// storage capex as max(C^E E, C^P P), peak as max_k of grid import,
// throughput as the sum of swing variables.
CostBreakdown ComputeBreakdown(const DesignModel& model,
                               const DesignProblem& problem,
                               std::span<const double> x);

// ComputeBreakdown plus the check against `objective`. Throws AuditError
// listing per-variable-kind deltas when the totals differ by more than
// 1e-6 * max(|objective|, 1).
CostBreakdown Audit(const DesignModel& model, const DesignProblem& problem,
                    std::span<const double> x, double objective);

}  // namespace hessco

#endif  // HESSCO_COST_MODEL_H_
