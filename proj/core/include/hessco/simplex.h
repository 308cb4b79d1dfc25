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

#ifndef HESSCO_SIMPLEX_H_
#define HESSCO_SIMPLEX_H_

#include <string>
#include <vector>

#include "hessco/lp_model.h"

namespace hessco {

struct SolverOptions {
  double feas_tol = 1e-7;
  double opt_tol = 1e-7;
  long max_iterations = 1000000;
  // Basis refactorisation period in pivots.
  int refactor_interval = 100;
};

enum class SolveStatus {
  kOptimal,
  kInfeasible,
  kUnbounded,
  kIterationLimit,
  kNumericalError,
};

const char* StatusName(SolveStatus status);

struct Solution {
  SolveStatus status = SolveStatus::kNumericalError;
  std::vector<double> values;  // one per model column
  double objective = 0.0;      // including the objective constant
  // Largest row or bound violation of `values`.
  double max_primal_residual = 0.0;
  // Largest reduced cost of the wrong sign at the final basis.
  double max_dual_infeasibility = 0.0;
  long iterations = 0;
  double seconds = 0.0;
  // For kInfeasible: the row whose phase-one artificial stayed largest.
  int certificate_row = -1;
  std::string message;

  bool optimal() const { return status == SolveStatus::kOptimal; }
};

// Bounded primal revised simplex. Two phases with artificials only where
// a slack cannot absorb the initial residual; Dantzig pricing with a
// Bland fallback after 2n non-improving pivots; Harris ratio test with
// bound flipping; sparse LU of the basis with product-form updates.
// Deterministic for a given model and options.
Solution Solve(const ModelInstance& model, const SolverOptions& options = {});

}  // namespace hessco

#endif  // HESSCO_SIMPLEX_H_
