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

#include <gtest/gtest.h>

#include "hessco/simplex.h"
#include "oracles.h"

namespace hessco {
namespace {

TEST(VerifyTest, OptimalSolutionSatisfiesEveryFamily) {
  const DesignModel m = BuildDesignModel(testing::DemoProblem(2, 2, {"B", "S", "F"}));
  const Solution s = Solve(m.lp);
  ASSERT_TRUE(s.optimal());
  const VerifyReport r = Verify(m, s.values);
  EXPECT_TRUE(r.violated_rows.empty());
  EXPECT_LE(r.WorstRow(), 1e-6);
  EXPECT_LE(r.bound_max, 1e-6);
  for (RowFamily f : {RowFamily::kBalance, RowFamily::kDynamics,
                      RowFamily::kMcCormick, RowFamily::kCapex}) {
    EXPECT_TRUE(r.family_max.count(f)) << FamilyName(f);
  }
  EXPECT_EQ(r.complementarity.size(), static_cast<std::size_t>(4 * m.steps));
  EXPECT_LE(r.complementarity_max, 1e-6);
  EXPECT_GE(r.swing_slack_max, -1e-6);
  EXPECT_LE(r.crate_ratio_max, 1.0 + 1e-6);
}

TEST(VerifyTest, PerturbedFinalEnergyBreaksOnlyLastDynamicsRow) {
  const DesignModel m = BuildDesignModel(testing::SmallBatteryProblem());
  const Solution s = Solve(m.lp);
  ASSERT_TRUE(s.optimal());
  std::vector<double> x = s.values;
  x[m.vars.At(VarKind::kStateOfEnergy, "B", m.steps)] -= 1e-3;
  const VerifyReport r = Verify(m, x);
  std::vector<std::string> dynamics;
  for (const RowViolationEntry& v : r.violated_rows) {
    if (v.family == RowFamily::kDynamics) dynamics.push_back(v.name);
  }
  ASSERT_EQ(dynamics.size(), 1u);
  EXPECT_EQ(dynamics[0], "soe[B," + std::to_string(m.steps - 1) + "]");
  EXPECT_NEAR(r.Max(RowFamily::kDynamics), 1e-3, 1e-9);
}

TEST(VerifyTest, ListsSimultaneousFlows) {
  const DesignModel m = BuildDesignModel(testing::SmallBatteryProblem());
  std::vector<double> x(m.lp.num_columns(), 0.0);
  x[m.vars.At(VarKind::kSourcePlus, kGrid, 2)] = 2.0;
  x[m.vars.At(VarKind::kSourceMinus, kGrid, 2)] = 0.5;
  x[m.vars.At(VarKind::kEssPlus, "B", 3)] = 0.25;
  x[m.vars.At(VarKind::kEssMinus, "B", 3)] = 0.5;
  const VerifyReport r = Verify(m, x);
  EXPECT_EQ(r.complementarity_max, 1.0);
  int nonzero = 0;
  for (const ComplementarityEntry& c : r.complementarity) {
    if (c.product == 0.0) continue;
    ++nonzero;
    if (c.entity == kGrid) {
      EXPECT_EQ(c.step, 2);
      EXPECT_EQ(c.product, 1.0);
    } else {
      EXPECT_EQ(c.entity, "B");
      EXPECT_EQ(c.step, 3);
      EXPECT_EQ(c.product, 0.125);
    }
  }
  EXPECT_EQ(nonzero, 2);
}

TEST(VerifyTest, BareModelHasNoComplementarity) {
  ModelInstance m;
  const int x = m.AddColumn("x", 0.0, 1.0);
  m.AddRow("r", RowFamily::kGeneric, Sense::kLessEqual, 1.0, {{x, 1.0}});
  const std::vector<double> pt = {1.5};
  const VerifyReport r = Verify(m, pt);
  EXPECT_TRUE(r.complementarity.empty());
  EXPECT_DOUBLE_EQ(r.bound_max, 0.5);
  ASSERT_EQ(r.violated_rows.size(), 1u);
  EXPECT_EQ(r.violated_rows[0].name, "r");
}

}  // namespace
}  // namespace hessco
