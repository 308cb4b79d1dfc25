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

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <set>

#include "hessco/catalog.h"
#include "hessco/error.h"
#include "hessco/simplex.h"
#include "test_support.h"

namespace hessco {
namespace {

using testing::Battery;
using testing::FlatProblem;

double Value(const DesignModel& m, const Solution& s, VarKind kind,
             const std::string& entity, int step = -1) {
  return s.values[m.vars.At(kind, entity, step)];
}

int RowIndex(const ModelInstance& m, const std::string& name) {
  for (int i = 0; i < m.num_rows(); ++i) {
    if (m.row(i).name == name) return i;
  }
  return -1;
}

TEST(ModelBuilderTest, PvReachesBusThroughEfficiency) {
  DesignProblem p = FlatProblem(60, 1, 0.1, 3.0, 0.5);
  p.sources.pv.power_ceiling = 5.0;
  p.fixed.pv_power = 5.0;
  const DesignModel m = BuildDesignModel(p);
  const Solution s = Solve(m.lp);
  ASSERT_TRUE(s.optimal());
  for (int k = 0; k < m.steps; ++k) {
    const double generated = Value(m, s, VarKind::kPvOutput, kPv, k);
    EXPECT_NEAR(generated, 2.5, 1e-9);
    EXPECT_NEAR(p.sources.pv.eta * generated, 2.25, 1e-9);
  }
}

TEST(ModelBuilderTest, GridImportCoversBusDemand) {
  const DesignProblem p = FlatProblem(60, 1, 0.1, 1.0);
  const DesignModel m = BuildDesignModel(p);
  const Solution s = Solve(m.lp);
  ASSERT_TRUE(s.optimal());
  for (int k = 0; k < m.steps; ++k) {
    EXPECT_NEAR(Value(m, s, VarKind::kSourcePlus, kGrid, k), 1.0 / 0.95, 1e-9);
    EXPECT_NEAR(Value(m, s, VarKind::kSourceMinus, kGrid, k), 0.0, 1e-9);
  }
}

TEST(ModelBuilderTest, BalanceRowCoefficients) {
  DesignProblem p = FlatProblem(60, 1, 0.1, 1.0);
  p.demand.eta_charging = 0.8;
  p.storage = {Battery()};
  const DesignModel m = BuildDesignModel(p);
  const Row& r = m.lp.row(RowIndex(m.lp, "balance[0]"));
  EXPECT_EQ(r.sense, Sense::kEqual);
  EXPECT_DOUBLE_EQ(r.rhs, 1.0 / 0.8);
  std::map<std::string, double> coef;
  for (const Term& t : r.terms) coef[m.lp.column_name(t.column)] = t.coefficient;
  EXPECT_DOUBLE_EQ(coef["P_src_plus[G,0]"], 0.95);
  EXPECT_DOUBLE_EQ(coef["P_src_minus[G,0]"], -1.0 / 0.95);
  EXPECT_DOUBLE_EQ(coef["P_pv[PV,0]"], 0.9);
  EXPECT_DOUBLE_EQ(coef["P_ess_plus[B,0]"], 1.0);
  EXPECT_DOUBLE_EQ(coef["P_ess_minus[B,0]"], -1.0);
  // Zero flows give zero grid contribution.
  std::vector<double> x(m.lp.num_columns(), 0.0);
  EXPECT_EQ(m.lp.RowActivity(RowIndex(m.lp, "balance[0]"), x), 0.0);
}

TEST(ModelBuilderTest, StorageCoefficientsMatchRecursion) {
  const SoeCoefficients c = StorageCoefficients(Battery(), 1.0);
  EXPECT_NEAR(c.charge * 0.1, 0.083, 1e-15);
  EXPECT_NEAR(c.discharge * 0.088, -0.1, 1e-15);
  const SoeCoefficients q = StorageCoefficients(Battery(), 0.25);
  EXPECT_DOUBLE_EQ(q.charge, 0.25 * 0.83);
}

TEST(ModelBuilderTest, DynamicsRowEncodesRecursion) {
  DesignProblem p = FlatProblem(60, 1, 0.1, 1.0);
  p.storage = {Battery()};
  const DesignModel m = BuildDesignModel(p);
  const int row = RowIndex(m.lp, "soe[B,4]");
  ASSERT_GE(row, 0);
  std::vector<double> x(m.lp.num_columns(), 0.0);
  x[m.vars.At(VarKind::kStateOfEnergy, "B", 4)] = 1.0;
  x[m.vars.At(VarKind::kEssMinus, "B", 4)] = 0.1;
  x[m.vars.At(VarKind::kStateOfEnergy, "B", 5)] = 1.083;
  EXPECT_NEAR(m.lp.RowViolation(row, x), 0.0, 1e-12);
  x[m.vars.At(VarKind::kEssMinus, "B", 4)] = 0.0;
  x[m.vars.At(VarKind::kEssPlus, "B", 4)] = 0.088;
  x[m.vars.At(VarKind::kStateOfEnergy, "B", 5)] = 0.9;
  EXPECT_NEAR(m.lp.RowViolation(row, x), 0.0, 1e-12);
  // Idle storage keeps its energy.
  x[m.vars.At(VarKind::kEssPlus, "B", 4)] = 0.0;
  x[m.vars.At(VarKind::kStateOfEnergy, "B", 5)] = 1.0;
  EXPECT_EQ(m.lp.RowViolation(row, x), 0.0);
}

TEST(ModelBuilderTest, McCormickIsTightAtEnergyCeiling) {
  DesignProblem p = FlatProblem(60, 1, 0.1, 1.0);
  p.storage = {Battery()};
  const DesignModel m = BuildDesignModel(p);
  std::vector<double> x(m.lp.num_columns(), 0.0);
  x[m.vars.At(VarKind::kEnergyCapacity, "B")] = 5.0;
  x[m.vars.At(VarKind::kCRate, "B", 0)] = 0.5;
  const int lo = RowIndex(m.lp, "mcc_lo[B,0]");
  const int hi = RowIndex(m.lp, "mcc_hi_r[B,0]");
  const int q = m.vars.At(VarKind::kSwing, "B", 0);
  x[q] = 2.5;
  EXPECT_EQ(m.lp.RowViolation(lo, x), 0.0);
  EXPECT_EQ(m.lp.RowViolation(hi, x), 0.0);
  x[q] = 2.4;
  EXPECT_NEAR(m.lp.RowViolation(lo, x), 0.1, 1e-12);
  x[q] = 2.6;
  EXPECT_NEAR(m.lp.RowViolation(hi, x), 0.1, 1e-12);
  // R = 0 forces q = 0.
  x[m.vars.At(VarKind::kCRate, "B", 0)] = 0.0;
  x[q] = 1e-3;
  EXPECT_GT(m.lp.RowViolation(hi, x), 0.0);
}

TEST(ModelBuilderTest, ThroughputSumsSwings) {
  DesignProblem p = FlatProblem(60, 1, 0.1, 1.0);
  p.storage = {Battery()};
  const DesignModel m = BuildDesignModel(p);
  const int row = RowIndex(m.lp, "throughput[B]");
  std::vector<double> x(m.lp.num_columns(), 0.0);
  EXPECT_EQ(m.lp.RowViolation(row, x), 0.0);
  for (int k = 0; k < 10; ++k) x[m.vars.At(VarKind::kSwing, "B", k)] = 0.1;
  x[m.vars.At(VarKind::kThroughput, "B")] = 1.0;
  EXPECT_NEAR(m.lp.RowViolation(row, x), 0.0, 1e-12);
}

TEST(ModelBuilderTest, CeilingsBecomeColumnBounds) {
  DesignProblem p = FlatProblem(60, 1, 0.1, 1.0);
  p.sources = CaseStudySources();
  p.storage = CaseStudyCatalog().entries();
  const DesignModel m = BuildDesignModel(p);
  const std::vector<std::pair<std::string, double>> power = {
      {"B", 10.0}, {"S", 30.0}, {"F", 20.0}};
  for (const auto& [name, ceiling] : power) {
    EXPECT_EQ(m.lp.upper(m.vars.At(VarKind::kEssPowerCapacity, name)), ceiling);
  }
  EXPECT_EQ(m.lp.upper(m.vars.At(VarKind::kSourceCapacity, kGrid)), 2.8);
  EXPECT_EQ(m.lp.upper(m.vars.At(VarKind::kSourceCapacity, kPv)), 5.0);
  EXPECT_EQ(m.lp.upper(m.vars.At(VarKind::kCRate, "B", 0)), 3.0);
  EXPECT_EQ(m.lp.lower(m.vars.At(VarKind::kEnergyCapacity, "B")), 0.0);
}

TEST(ModelBuilderTest, ZeroCapacityStorageStaysIdle) {
  DesignProblem p = FlatProblem(60, 1, 0.1, 1.0);
  p.storage = {Battery()};
  p.fixed.ess_energy["B"] = 0.0;
  p.fixed.ess_power["B"] = 0.0;
  const DesignModel m = BuildDesignModel(p);
  const Solution s = Solve(m.lp);
  ASSERT_TRUE(s.optimal());
  for (int k = 0; k < m.steps; ++k) {
    EXPECT_NEAR(Value(m, s, VarKind::kEssPlus, "B", k), 0.0, 1e-12);
    EXPECT_NEAR(Value(m, s, VarKind::kEssMinus, "B", k), 0.0, 1e-12);
    EXPECT_NEAR(Value(m, s, VarKind::kStateOfEnergy, "B", k), 0.0, 1e-12);
  }
}

TEST(ModelBuilderTest, FixedSizingOutsideCeilingIsRejected) {
  DesignProblem p = FlatProblem(60, 1, 0.1, 1.0);
  p.storage = {Battery()};
  p.fixed.ess_energy["B"] = 6.0;
  EXPECT_THROW(BuildDesignModel(p), ConfigError);
  p.fixed.ess_energy.clear();
  p.fixed.ess_energy["Z"] = 1.0;
  EXPECT_THROW(BuildDesignModel(p), ConfigError);
}

TEST(ModelBuilderTest, NonPositiveCeilingForEnvelopeIsRejected) {
  DesignProblem p = FlatProblem(60, 1, 0.1, 1.0);
  EssSpec e = Battery();
  e.energy_ceiling = 0.0;
  p.storage = {e};
  EXPECT_THROW(BuildDesignModel(p), ConfigError);
  e = Battery();
  e.crate_ceiling = 0.0;
  p.storage = {e};
  EXPECT_THROW(BuildDesignModel(p), ConfigError);
}

TEST(ModelBuilderTest, EmptyStorageSetIsFeasible) {
  DesignProblem p = FlatProblem(60, 2, 0.08, 1.5, 0.3);
  p.sources = CaseStudySources();
  const DesignModel m = BuildDesignModel(p);
  const Solution s = Solve(m.lp);
  EXPECT_TRUE(s.optimal()) << s.message;
}

TEST(ModelBuilderTest, DimensionsOfMonthModel) {
  DesignProblem p = FlatProblem(60, 30, 0.1, 1.0, 0.2);
  p.sources = CaseStudySources();
  p.storage = CaseStudyCatalog().entries();
  const auto start = std::chrono::steady_clock::now();
  const DesignModel m = BuildDesignModel(p);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  EXPECT_LT(seconds, 10.0);
  const int k = 720;
  const int e = 3;
  EXPECT_EQ(m.steps, k);
  EXPECT_EQ(m.lp.num_columns(), 3 + 4 * e + 3 * k + 5 * e * k + e);
  // Per step: PV, balance, two grid limits, peak. Per storage and step:
  // two power limits, SoE cap, dynamics, two swing rows, three envelope
  // rows. Per storage: final SoE cap, periodicity, throughput, two capex
  // rows. Only the battery has a depth-of-discharge limit (K + 1 rows).
  EXPECT_EQ(m.lp.num_rows(), 5 * k + 9 * e * k + 5 * e + (k + 1));
}

TEST(ModelBuilderTest, EveryKindMapsToColumnsWithUniqueNames) {
  DesignProblem p = FlatProblem(60, 1, 0.1, 1.0);
  p.storage = {Battery()};
  const DesignModel m = BuildDesignModel(p);
  std::set<VarKind> kinds;
  std::set<std::string> names;
  for (int j = 0; j < m.lp.num_columns(); ++j) {
    EXPECT_EQ(m.vars.ref(j).column, j);
    kinds.insert(m.vars.ref(j).kind);
    names.insert(m.lp.column_name(j));
  }
  EXPECT_EQ(kinds.size(), 14u);
  EXPECT_EQ(names.size(), static_cast<std::size_t>(m.lp.num_columns()));
}

TEST(ModelBuilderTest, BuildIsDeterministic) {
  DesignProblem p = FlatProblem(60, 2, 0.1, 1.0, 0.4);
  p.storage = CaseStudyCatalog().entries();
  EXPECT_TRUE(BuildDesignModel(p).lp.SameStructure(BuildDesignModel(p).lp));
}

}  // namespace
}  // namespace hessco
