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

#include "hessco/simplex.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hessco/cost_model.h"
#include "hessco/model_builder.h"
#include "oracles.h"
#include "test_support.h"

namespace hessco {
namespace {

TEST(SimplexTest, SingleLowerBoundRow) {
  ModelInstance m;
  const int x = m.AddColumn("x", 0.0, HUGE_VAL);
  m.AddObjective(x, 1.0);
  m.AddRow("r", RowFamily::kGeneric, Sense::kGreaterEqual, 3.0, {{x, 1.0}});
  const Solution s = Solve(m);
  ASSERT_TRUE(s.optimal());
  EXPECT_NEAR(s.values[0], 3.0, 1e-9);
  EXPECT_NEAR(s.objective, 3.0, 1e-9);
}

TEST(SimplexTest, EmptyModelUsesBounds) {
  ModelInstance m;
  const int x = m.AddColumn("x", -2.0, 4.0);
  const int y = m.AddColumn("y", 1.0, 5.0);
  m.AddObjective(x, -1.0);
  m.AddObjective(y, 1.0);
  m.AddObjectiveConstant(0.5);
  const Solution s = Solve(m);
  ASSERT_TRUE(s.optimal());
  EXPECT_EQ(s.values[x], 4.0);
  EXPECT_EQ(s.values[y], 1.0);
  EXPECT_DOUBLE_EQ(s.objective, -2.5);
}

TEST(SimplexTest, FreeAndNegativeBounds) {
  ModelInstance m;
  const int x = m.AddColumn("x", -HUGE_VAL, HUGE_VAL);
  const int y = m.AddColumn("y", -3.0, -1.0);
  m.AddObjective(x, 1.0);
  m.AddObjective(y, -1.0);
  m.AddRow("floor", RowFamily::kGeneric, Sense::kGreaterEqual, -5.0, {{x, 1.0}});
  m.AddRow("link", RowFamily::kGeneric, Sense::kLessEqual, 10.0,
           {{x, -1.0}, {y, 1.0}});
  const Solution s = Solve(m);
  ASSERT_TRUE(s.optimal()) << s.message;
  EXPECT_NEAR(s.values[x], -5.0, 1e-9);
  EXPECT_NEAR(s.values[y], -1.0, 1e-9);
  EXPECT_NEAR(s.objective, -4.0, 1e-9);
}

TEST(SimplexTest, ReportsInfeasibilityWithCertificateRow) {
  ModelInstance m;
  const int x = m.AddColumn("x", 0.0, HUGE_VAL);
  m.AddRow("cap", RowFamily::kGeneric, Sense::kLessEqual, 1.0, {{x, 1.0}});
  m.AddRow("need", RowFamily::kGeneric, Sense::kGreaterEqual, 2.0, {{x, 1.0}});
  const Solution s = Solve(m);
  EXPECT_EQ(s.status, SolveStatus::kInfeasible);
  EXPECT_TRUE(s.certificate_row == 0 || s.certificate_row == 1);
  EXPECT_STREQ(StatusName(s.status), "infeasible");
}

TEST(SimplexTest, ReportsUnboundedness) {
  ModelInstance m;
  const int x = m.AddColumn("x", 0.0, HUGE_VAL);
  const int y = m.AddColumn("y", 0.0, HUGE_VAL);
  m.AddObjective(x, -1.0);
  m.AddRow("r", RowFamily::kGeneric, Sense::kLessEqual, 1.0, {{x, 1.0}, {y, -1.0}});
  EXPECT_EQ(Solve(m).status, SolveStatus::kUnbounded);
}

TEST(SimplexTest, StopsAtIterationLimit) {
  const DesignModel m = BuildDesignModel(testing::SmallBatteryProblem());
  SolverOptions o;
  o.max_iterations = 1;
  EXPECT_EQ(Solve(m.lp, o).status, SolveStatus::kIterationLimit);
}

TEST(SimplexTest, GridOnlyDispatchMatchesClosedForm) {
  DesignProblem p = testing::FlatProblem(240, 1, 0.0, 1.5);
  p.profiles.price = {0.05, 0.04, 0.08, 0.1, 0.07, 0.12};
  const Solution s = Solve(BuildDesignModel(p).lp);
  ASSERT_TRUE(s.optimal());
  double energy = 0.0;
  for (double price : p.profiles.price) energy += 4.0 * price * 1.5 / 0.95;
  double npv = 0.0;
  for (int y = 1; y <= 20; ++y) npv += std::pow(1.04, -y);
  EXPECT_NEAR(s.objective, npv * 365.0 * energy, 1e-7 * s.objective);
}

struct DenseLp {
  int n = 0;
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  std::vector<Sense> sense;
  std::vector<double> c;
  std::vector<double> upper;
};

// Solves a square system by Gaussian elimination with partial pivoting.
bool SolveSquare(std::vector<std::vector<double>> a, std::vector<double> b,
                 std::vector<double>* x) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (std::abs(a[pivot][col]) < 1e-10) return false;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (int k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  x->resize(n);
  for (int i = 0; i < n; ++i) (*x)[i] = b[i] / a[i][i];
  return true;
}

// Minimum over all vertices: every choice of n tight constraints among
// rows and bounds that includes all equality rows.
double VertexEnumeration(const DenseLp& lp) {
  const int n = lp.n;
  const int m = static_cast<int>(lp.b.size());
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  std::vector<bool> must;
  for (int i = 0; i < m; ++i) {
    rows.push_back(lp.a[i]);
    rhs.push_back(lp.b[i]);
    must.push_back(lp.sense[i] == Sense::kEqual);
  }
  for (int j = 0; j < n; ++j) {
    std::vector<double> e(n, 0.0);
    e[j] = 1.0;
    rows.push_back(e);
    rhs.push_back(0.0);
    must.push_back(false);
    rows.push_back(e);
    rhs.push_back(lp.upper[j]);
    must.push_back(false);
  }
  const int total = static_cast<int>(rows.size());
  double best = HUGE_VAL;
  std::vector<int> pick(n);
  auto feasible = [&](const std::vector<double>& x) {
    for (int j = 0; j < n; ++j) {
      if (x[j] < -1e-9 || x[j] > lp.upper[j] + 1e-9) return false;
    }
    for (int i = 0; i < m; ++i) {
      double act = 0.0;
      for (int j = 0; j < n; ++j) act += lp.a[i][j] * x[j];
      if (lp.sense[i] == Sense::kLessEqual && act > lp.b[i] + 1e-9) return false;
      if (lp.sense[i] == Sense::kGreaterEqual && act < lp.b[i] - 1e-9) return false;
      if (lp.sense[i] == Sense::kEqual && std::abs(act - lp.b[i]) > 1e-9) return false;
    }
    return true;
  };
  for (int mask = 0; mask < (1 << total); ++mask) {
    if (__builtin_popcount(mask) != n) continue;
    bool ok = true;
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    for (int i = 0; i < total; ++i) {
      if (mask & (1 << i)) {
        a.push_back(rows[i]);
        b.push_back(rhs[i]);
      } else if (must[i]) {
        ok = false;
      }
    }
    std::vector<double> x;
    if (!ok || !SolveSquare(a, b, &x) || !feasible(x)) continue;
    double obj = 0.0;
    for (int j = 0; j < n; ++j) obj += lp.c[j] * x[j];
    best = std::min(best, obj);
  }
  return best;
}

TEST(SimplexTest, RandomLpsMatchVertexEnumeration) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::uniform_real_distribution<double> pos(0.1, 2.0);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    DenseLp lp;
    lp.n = 2 + trial % 4;
    const int rows = 1 + (trial / 4) % 4;
    for (int j = 0; j < lp.n; ++j) {
      lp.c.push_back(coef(rng));
      lp.upper.push_back(pos(rng));
    }
    std::vector<double> interior;
    for (int j = 0; j < lp.n; ++j) interior.push_back(0.5 * lp.upper[j]);
    for (int i = 0; i < rows; ++i) {
      std::vector<double> row;
      double act = 0.0;
      for (int j = 0; j < lp.n; ++j) {
        row.push_back(coef(rng));
        act += row.back() * interior[j];
      }
      const Sense s = i == 0 ? Sense::kEqual
                             : (i % 2 ? Sense::kLessEqual : Sense::kGreaterEqual);
      double b = act;
      if (s == Sense::kLessEqual) b += 0.5 * pos(rng);
      if (s == Sense::kGreaterEqual) b -= 0.5 * pos(rng);
      lp.a.push_back(row);
      lp.b.push_back(b);
      lp.sense.push_back(s);
    }
    ModelInstance m;
    for (int j = 0; j < lp.n; ++j) {
      m.AddColumn("x" + std::to_string(j), 0.0, lp.upper[j]);
      m.AddObjective(j, lp.c[j]);
    }
    for (std::size_t i = 0; i < lp.b.size(); ++i) {
      std::vector<Term> terms;
      for (int j = 0; j < lp.n; ++j) terms.push_back({j, lp.a[i][j]});
      m.AddRow("r" + std::to_string(i), RowFamily::kGeneric, lp.sense[i], lp.b[i],
               terms);
    }
    const double expected = VertexEnumeration(lp);
    const Solution s = Solve(m);
    ASSERT_TRUE(s.optimal()) << "trial " << trial << ": " << s.message;
    ASSERT_TRUE(std::isfinite(expected));
    EXPECT_NEAR(s.objective, expected, 1e-6) << "trial " << trial;
    EXPECT_LE(s.max_primal_residual, 1e-9);
    ++checked;
  }
  EXPECT_EQ(checked, 200);
}

TEST(SimplexTest, BatteryDispatchMatchesGridSearch) {
  const DesignProblem p = testing::SmallBatteryProblem();
  const DesignModel m = BuildDesignModel(p);
  const Solution s = Solve(m.lp);
  ASSERT_TRUE(s.optimal());
  const double reference = testing::GridSearchDispatch(p);
  EXPECT_LE(s.objective, reference + 1e-6 * std::abs(reference));
  EXPECT_LE(std::abs(s.objective - reference), 0.02 * std::abs(reference));
  // The storage is actually cycled.
  double throughput = s.values[m.vars.At(VarKind::kThroughput, "B")];
  EXPECT_GT(throughput, 1.0);
}

TEST(SimplexTest, IsDeterministicAndIndependentOfRefactorInterval) {
  const DesignModel m = BuildDesignModel(testing::DemoProblem(4, 2, {"B", "S"}));
  const Solution a = Solve(m.lp);
  const Solution b = Solve(m.lp);
  ASSERT_TRUE(a.optimal());
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(a.iterations, b.iterations);
  SolverOptions o;
  o.refactor_interval = 7;
  const Solution c = Solve(m.lp, o);
  ASSERT_TRUE(c.optimal());
  EXPECT_NEAR(c.objective, a.objective, 1e-7 * std::abs(a.objective));
}

}  // namespace
}  // namespace hessco
