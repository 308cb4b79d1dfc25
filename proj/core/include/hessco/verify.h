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

#ifndef HESSCO_VERIFY_H_
#define HESSCO_VERIFY_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "hessco/lp_model.h"
#include "hessco/model_builder.h"

namespace hessco {

struct RowViolationEntry {
  int row = -1;
  std::string name;
  RowFamily family = RowFamily::kGeneric;
  double violation = 0.0;
};

// Products of paired flow variables at one step.
struct ComplementarityEntry {
  std::string entity;
  int step = 0;
  double product = 0.0;
};

struct VerifyReport {
  // Largest violation per constraint family (every family present in the
  // model is listed, satisfied ones with 0).
  std::map<RowFamily, double> family_max;
  double bound_max = 0.0;
  // Rows violated by more than the report tolerance, in row order.
  std::vector<RowViolationEntry> violated_rows;
  // Grid import*export and storage discharge*charge per step; empty when
  // verifying a bare ModelInstance.
  std::vector<ComplementarityEntry> complementarity;
  double complementarity_max = 0.0;
  // Largest q - |E[k+1] - E[k]| over all storages and steps.
  double swing_slack_max = 0.0;
  // Largest realised C-rate q / E^max divided by its ceiling.
  double crate_ratio_max = 0.0;

  double Max(RowFamily family) const;
  double WorstRow() const;
};

// Independent pass over every row of `model` at `x`.
VerifyReport Verify(const ModelInstance& model, std::span<const double> x,
                    double tolerance = 1e-6);
// Adds complementarity and swing diagnostics for a design model.
VerifyReport Verify(const DesignModel& model, std::span<const double> x,
                    double tolerance = 1e-6);

}  // namespace hessco

#endif  // HESSCO_VERIFY_H_
