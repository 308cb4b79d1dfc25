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

#include "hessco/verify.h"

#include <algorithm>
#include <cmath>
#include <set>

namespace hessco {

double VerifyReport::Max(RowFamily family) const {
  const auto it = family_max.find(family);
  return it == family_max.end() ? 0.0 : it->second;
}

double VerifyReport::WorstRow() const {
  double worst = 0.0;
  for (const auto& [family, v] : family_max) worst = std::max(worst, v);
  return worst;
}

VerifyReport Verify(const ModelInstance& model, std::span<const double> x,
                    double tolerance) {
  VerifyReport report;
  for (int i = 0; i < model.num_rows(); ++i) {
    const Row& row = model.row(i);
    const double v = model.RowViolation(i, x);
    double& slot = report.family_max[row.family];
    slot = std::max(slot, v);
    if (v > tolerance) {
      report.violated_rows.push_back({i, row.name, row.family, v});
    }
  }
  for (int j = 0; j < model.num_columns(); ++j) {
    report.bound_max = std::max(report.bound_max, model.lower(j) - x[j]);
    report.bound_max = std::max(report.bound_max, x[j] - model.upper(j));
  }
  return report;
}

VerifyReport Verify(const DesignModel& model, std::span<const double> x,
                    double tolerance) {
  VerifyReport report = Verify(model.lp, x, tolerance);
  const VariableRegistry& vars = model.vars;
  std::set<std::string> storage;
  for (const VariableRef& r : vars.refs()) {
    if (r.kind == VarKind::kEnergyCapacity) storage.insert(r.entity);
  }
  auto add = [&](const std::string& entity, int k, double a, double b) {
    const double product = a * b;
    report.complementarity.push_back({entity, k, product});
    report.complementarity_max = std::max(report.complementarity_max, product);
  };
  for (int k = 0; k < model.steps; ++k) {
    add(kGrid, k, x[vars.At(VarKind::kSourcePlus, kGrid, k)],
        x[vars.At(VarKind::kSourceMinus, kGrid, k)]);
    for (const std::string& e : storage) {
      add(e, k, x[vars.At(VarKind::kEssPlus, e, k)],
          x[vars.At(VarKind::kEssMinus, e, k)]);
    }
  }
  for (const std::string& e : storage) {
    const double e_max = x[vars.At(VarKind::kEnergyCapacity, e)];
    const double ceiling = model.lp.upper(vars.At(VarKind::kCRate, e, 0));
    for (int k = 0; k < model.steps; ++k) {
      const double q = x[vars.At(VarKind::kSwing, e, k)];
      const double swing = std::abs(x[vars.At(VarKind::kStateOfEnergy, e, k + 1)] -
                                    x[vars.At(VarKind::kStateOfEnergy, e, k)]);
      report.swing_slack_max = std::max(report.swing_slack_max, q - swing);
      if (e_max > tolerance && ceiling > 0.0) {
        report.crate_ratio_max =
            std::max(report.crate_ratio_max, q / e_max / ceiling);
      }
    }
  }
  return report;
}

}  // namespace hessco
