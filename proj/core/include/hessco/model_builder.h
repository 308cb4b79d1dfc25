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

#ifndef HESSCO_MODEL_BUILDER_H_
#define HESSCO_MODEL_BUILDER_H_

#include <string>

#include "hessco/lp_model.h"
#include "hessco/problem.h"

namespace hessco {

inline constexpr const char* kGrid = "G";
inline constexpr const char* kPv = "PV";

// The design LP together with the meaning of each column.
struct DesignModel {
  ModelInstance lp;
  VariableRegistry vars;
  int steps = 0;
};

// State-of-energy coefficients of the storage recursion
//   E[k+1] = E[k] + discharge * p+[k] + charge * p-[k]
// with discharge = -tau / eta_d and charge = tau * eta_c.
struct SoeCoefficients {
  double discharge = 0.0;
  double charge = 0.0;
};
SoeCoefficients StorageCoefficients(const EssSpec& ess, double tau_hours);

// Assembles the design LP step by step. Every Add* call requires
// RegisterVariables() first; Build() runs the full sequence.
class ModelBuilder {
 public:
  // `problem` must outlive the builder. Validates it.
  explicit ModelBuilder(const DesignProblem& problem);

  // Creates all columns with their box bounds (capacity ceilings, fixed
  // sizes, C-rate ceiling).
  void RegisterVariables();
  // PV generation limited by availability: P_pv[k] <= cf[k] * P_PV^max.
  void AddSourceFlows();
  // Bus power balance at every step.
  void AddBalance();
  // Operating limits coupled to the sized capacities.
  void AddCapacityBounds();
  // State-of-energy recursion, depth of discharge and periodicity.
  void AddEssDynamics();
  // |Delta E| epigraph and McCormick envelope of q = E^max * R.
  // Throws ConfigError when an energy or C-rate ceiling is not positive.
  void AddCrateMcCormick();
  // Q_e = sum_k q_e,k.
  void AddThroughput();
  // P_peak >= grid import at every step.
  void AddPeakEpigraph();

  DesignModel& model() { return model_; }
  const DesignProblem& problem() const { return problem_; }
  DesignModel Release() { return std::move(model_); }

 private:
  int Var(VarKind kind, const std::string& entity, int step = -1) const {
    return model_.vars.At(kind, entity, step);
  }

  const DesignProblem& problem_;
  DesignModel model_;
  bool registered_ = false;
};

// Full assembly: constraints above plus the total-cost-of-ownership
// objective from the cost model.
DesignModel BuildDesignModel(const DesignProblem& problem);

}  // namespace hessco

#endif  // HESSCO_MODEL_BUILDER_H_
