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

#include <Eigen/OrderingMethods>
#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <memory>

namespace hessco {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kZeroPivot = 1e-9;

using SpMat = Eigen::SparseMatrix<double, Eigen::ColMajor, int>;
using LuSolver = Eigen::SparseLU<SpMat, Eigen::COLAMDOrdering<int>>;

enum class Place { kBasic, kLower, kUpper, kFree };

struct Eta {
  int row;
  double pivot;
  std::vector<std::pair<int, double>> entries;  // excluding `row`
};

class Simplex {
 public:
  Simplex(const ModelInstance& model, const SolverOptions& options)
      : model_(model), options_(options) {}

  Solution Run();

 private:
  enum class Outcome { kOptimal, kUnbounded, kIterationLimit, kNumerical };

  void BuildColumns();
  void InitialBasis();
  bool Refactor();
  void RecomputeBasics();
  void Ftran(Eigen::VectorXd& v) const;
  void Btran(Eigen::VectorXd& v) const;
  double ColumnDot(int j, const Eigen::VectorXd& y) const;
  void LoadColumn(int j, Eigen::VectorXd& v) const;
  double PhaseObjective() const;
  Outcome Iterate();
  double DualInfeasibility();
  Solution Finish(SolveStatus status, const std::string& message);

  const ModelInstance& model_;
  const SolverOptions& options_;
  int n_ = 0;  // structural columns
  int m_ = 0;  // rows
  int total_ = 0;

  // Structural columns in compressed form.
  std::vector<int> start_;
  std::vector<int> index_;
  std::vector<double> value_;
  // Artificial column j >= n_ + m_ covers row art_row_[j - n_ - m_].
  std::vector<int> art_row_;
  std::vector<double> art_sign_;

  std::vector<double> rhs_;
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<double> cost_;
  std::vector<double> x_;
  std::vector<Place> place_;
  std::vector<int> head_;      // basic column per row position
  std::vector<int> position_;  // row position per column, -1 if nonbasic

  std::unique_ptr<LuSolver> lu_;
  std::vector<Eta> etas_;
  long iterations_ = 0;
};

void Simplex::BuildColumns() {
  n_ = model_.num_columns();
  m_ = model_.num_rows();
  std::vector<int> count(n_ + 1, 0);
  for (const Row& r : model_.rows()) {
    for (const Term& t : r.terms) ++count[t.column + 1];
  }
  start_.assign(n_ + 1, 0);
  for (int j = 0; j < n_; ++j) start_[j + 1] = start_[j] + count[j + 1];
  index_.resize(start_[n_]);
  value_.resize(start_[n_]);
  std::vector<int> fill(start_.begin(), start_.end() - 1);
  for (int i = 0; i < m_; ++i) {
    for (const Term& t : model_.row(i).terms) {
      index_[fill[t.column]] = i;
      value_[fill[t.column]++] = t.coefficient;
    }
  }
  rhs_.resize(m_);
  for (int i = 0; i < m_; ++i) rhs_[i] = model_.row(i).rhs;
}

void Simplex::InitialBasis() {
  lower_.clear();
  upper_.clear();
  x_.clear();
  place_.clear();
  for (int j = 0; j < n_; ++j) {
    const double lo = model_.lower(j);
    const double hi = model_.upper(j);
    lower_.push_back(lo);
    upper_.push_back(hi);
    if (std::isfinite(lo)) {
      x_.push_back(lo);
      place_.push_back(Place::kLower);
    } else if (std::isfinite(hi)) {
      x_.push_back(hi);
      place_.push_back(Place::kUpper);
    } else {
      x_.push_back(0.0);
      place_.push_back(Place::kFree);
    }
  }
  // Row i: a_i x + s_i = b_i.
  std::vector<double> residual = rhs_;
  for (int j = 0; j < n_; ++j) {
    if (x_[j] == 0.0) continue;
    for (int p = start_[j]; p < start_[j + 1]; ++p) {
      residual[index_[p]] -= value_[p] * x_[j];
    }
  }
  head_.assign(m_, -1);
  for (int i = 0; i < m_; ++i) {
    double lo = 0.0;
    double hi = 0.0;
    switch (model_.row(i).sense) {
      case Sense::kLessEqual: hi = kInf; break;
      case Sense::kGreaterEqual: lo = -kInf; break;
      case Sense::kEqual: break;
    }
    lower_.push_back(lo);
    upper_.push_back(hi);
    const double clamped = std::clamp(residual[i], lo, hi);
    x_.push_back(clamped);
    if (clamped == residual[i]) {
      place_.push_back(Place::kBasic);
      head_[i] = n_ + i;
    } else {
      place_.push_back(clamped == lo ? Place::kLower : Place::kUpper);
    }
  }
  for (int i = 0; i < m_; ++i) {
    if (head_[i] >= 0) continue;
    const double gap = residual[i] - x_[n_ + i];
    art_row_.push_back(i);
    art_sign_.push_back(gap > 0.0 ? 1.0 : -1.0);
    lower_.push_back(0.0);
    upper_.push_back(kInf);
    x_.push_back(std::abs(gap));
    place_.push_back(Place::kBasic);
    head_[i] = static_cast<int>(x_.size()) - 1;
  }
  total_ = static_cast<int>(x_.size());
  position_.assign(total_, -1);
  for (int i = 0; i < m_; ++i) position_[head_[i]] = i;
}

void Simplex::LoadColumn(int j, Eigen::VectorXd& v) const {
  v.setZero(m_);
  if (j < n_) {
    for (int p = start_[j]; p < start_[j + 1]; ++p) v[index_[p]] = value_[p];
  } else if (j < n_ + m_) {
    v[j - n_] = 1.0;
  } else {
    v[art_row_[j - n_ - m_]] = art_sign_[j - n_ - m_];
  }
}

double Simplex::ColumnDot(int j, const Eigen::VectorXd& y) const {
  if (j < n_) {
    double s = 0.0;
    for (int p = start_[j]; p < start_[j + 1]; ++p) s += value_[p] * y[index_[p]];
    return s;
  }
  if (j < n_ + m_) return y[j - n_];
  return art_sign_[j - n_ - m_] * y[art_row_[j - n_ - m_]];
}

bool Simplex::Refactor() {
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(4 * m_);
  for (int i = 0; i < m_; ++i) {
    const int j = head_[i];
    if (j < n_) {
      for (int p = start_[j]; p < start_[j + 1]; ++p) {
        triplets.emplace_back(index_[p], i, value_[p]);
      }
    } else if (j < n_ + m_) {
      triplets.emplace_back(j - n_, i, 1.0);
    } else {
      triplets.emplace_back(art_row_[j - n_ - m_], i, art_sign_[j - n_ - m_]);
    }
  }
  SpMat basis(m_, m_);
  basis.setFromTriplets(triplets.begin(), triplets.end());
  basis.makeCompressed();
  lu_ = std::make_unique<LuSolver>();
  lu_->analyzePattern(basis);
  lu_->factorize(basis);
  etas_.clear();
  return lu_->info() == Eigen::Success;
}

void Simplex::Ftran(Eigen::VectorXd& v) const {
  v = lu_->solve(v).eval();
  for (const Eta& e : etas_) {
    const double pivot_value = v[e.row] / e.pivot;
    v[e.row] = pivot_value;
    if (pivot_value == 0.0) continue;
    for (const auto& [i, a] : e.entries) v[i] -= a * pivot_value;
  }
}

void Simplex::Btran(Eigen::VectorXd& v) const {
  for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
    double s = v[it->row];
    for (const auto& [i, a] : it->entries) s -= a * v[i];
    v[it->row] = s / it->pivot;
  }
  v = lu_->transpose().solve(v).eval();
}

void Simplex::RecomputeBasics() {
  Eigen::VectorXd r(m_);
  for (int i = 0; i < m_; ++i) r[i] = rhs_[i];
  for (int j = 0; j < total_; ++j) {
    if (place_[j] == Place::kBasic || x_[j] == 0.0) continue;
    if (j < n_) {
      for (int p = start_[j]; p < start_[j + 1]; ++p) {
        r[index_[p]] -= value_[p] * x_[j];
      }
    } else if (j < n_ + m_) {
      r[j - n_] -= x_[j];
    } else {
      r[art_row_[j - n_ - m_]] -= art_sign_[j - n_ - m_] * x_[j];
    }
  }
  Ftran(r);
  for (int i = 0; i < m_; ++i) x_[head_[i]] = r[i];
}

double Simplex::PhaseObjective() const {
  double s = 0.0;
  for (int j = 0; j < total_; ++j) s += cost_[j] * x_[j];
  return s;
}

Simplex::Outcome Simplex::Iterate() {
  const double ftol = options_.feas_tol;
  const double dtol = options_.opt_tol;
  const long stall_limit = 2L * total_;
  double best = PhaseObjective();
  long stalled = 0;
  bool bland = false;
  Eigen::VectorXd y(m_);
  Eigen::VectorXd alpha(m_);

  if (!Refactor()) return Outcome::kNumerical;
  RecomputeBasics();

  while (true) {
    if (iterations_ >= options_.max_iterations) return Outcome::kIterationLimit;
    if (static_cast<int>(etas_.size()) >= options_.refactor_interval) {
      if (!Refactor()) return Outcome::kNumerical;
      RecomputeBasics();
    }

    for (int i = 0; i < m_; ++i) y[i] = cost_[head_[i]];
    Btran(y);

    int entering = -1;
    double entering_d = 0.0;
    double best_score = 0.0;
    for (int j = 0; j < total_; ++j) {
      const Place p = place_[j];
      if (p == Place::kBasic || lower_[j] == upper_[j]) continue;
      const double d = cost_[j] - ColumnDot(j, y);
      double score = 0.0;
      if (p == Place::kLower) {
        score = -d;
      } else if (p == Place::kUpper) {
        score = d;
      } else {
        score = std::abs(d);
      }
      if (score <= dtol) continue;
      if (bland) {
        entering = j;
        entering_d = d;
        break;
      }
      if (score > best_score) {
        best_score = score;
        entering = j;
        entering_d = d;
      }
    }

    if (entering < 0) {
      if (etas_.empty()) return Outcome::kOptimal;
      // Confirm on a fresh factorisation.
      if (!Refactor()) return Outcome::kNumerical;
      RecomputeBasics();
      continue;
    }

    const double dir = entering_d < 0.0 ? 1.0 : -1.0;
    LoadColumn(entering, alpha);
    Ftran(alpha);

    const double range = upper_[entering] - lower_[entering];
    // Pass 1: loosest step keeping every basic within tolerance.
    double theta_max = kInf;
    double theta_exact = kInf;
    int bland_row = -1;
    for (int i = 0; i < m_; ++i) {
      const double g = dir * alpha[i];
      if (std::abs(g) < kZeroPivot) continue;
      const int b = head_[i];
      double loose;
      double exact;
      if (g > 0.0) {
        if (!std::isfinite(lower_[b])) continue;
        loose = (x_[b] - lower_[b] + ftol) / g;
        exact = (x_[b] - lower_[b]) / g;
      } else {
        if (!std::isfinite(upper_[b])) continue;
        loose = (upper_[b] - x_[b] + ftol) / -g;
        exact = (upper_[b] - x_[b]) / -g;
      }
      theta_max = std::min(theta_max, loose);
      exact = std::max(exact, 0.0);
      if (exact < theta_exact ||
          (exact == theta_exact && bland_row >= 0 && b < head_[bland_row])) {
        theta_exact = exact;
        bland_row = i;
      }
    }

    if (!std::isfinite(theta_max) && !std::isfinite(range)) {
      return Outcome::kUnbounded;
    }

    int leave_row = -1;
    double theta;
    if (std::isfinite(range) && range <= theta_exact) {
      theta = range;
    } else if (bland) {
      leave_row = bland_row;
      theta = theta_exact;
    } else {
      // Pass 2: largest pivot among rows blocking within theta_max.
      double best_pivot = 0.0;
      for (int i = 0; i < m_; ++i) {
        const double g = dir * alpha[i];
        if (std::abs(g) < kZeroPivot) continue;
        const int b = head_[i];
        double exact;
        if (g > 0.0) {
          if (!std::isfinite(lower_[b])) continue;
          exact = (x_[b] - lower_[b]) / g;
        } else {
          if (!std::isfinite(upper_[b])) continue;
          exact = (upper_[b] - x_[b]) / -g;
        }
        if (exact <= theta_max && std::abs(g) > best_pivot) {
          best_pivot = std::abs(g);
          leave_row = i;
        }
      }
      const double g = dir * alpha[leave_row];
      const int b = head_[leave_row];
      theta = g > 0.0 ? (x_[b] - lower_[b]) / g : (upper_[b] - x_[b]) / -g;
      theta = std::max(theta, 0.0);
    }

    ++iterations_;
    if (theta != 0.0) {
      for (int i = 0; i < m_; ++i) {
        if (alpha[i] != 0.0) x_[head_[i]] -= theta * dir * alpha[i];
      }
      x_[entering] += dir * theta;
    }

    if (leave_row < 0) {
      x_[entering] = dir > 0.0 ? upper_[entering] : lower_[entering];
      place_[entering] = dir > 0.0 ? Place::kUpper : Place::kLower;
    } else {
      const int leaving = head_[leave_row];
      const double g = dir * alpha[leave_row];
      if (g > 0.0) {
        x_[leaving] = lower_[leaving];
        place_[leaving] = Place::kLower;
      } else {
        x_[leaving] = upper_[leaving];
        place_[leaving] = Place::kUpper;
      }
      position_[leaving] = -1;
      head_[leave_row] = entering;
      position_[entering] = leave_row;
      place_[entering] = Place::kBasic;
      Eta eta{leave_row, alpha[leave_row], {}};
      for (int i = 0; i < m_; ++i) {
        if (i != leave_row && alpha[i] != 0.0) {
          eta.entries.emplace_back(i, alpha[i]);
        }
      }
      etas_.push_back(std::move(eta));
    }

    const double objective = PhaseObjective();
    if (objective < best - 1e-12 * (1.0 + std::abs(best))) {
      best = objective;
      stalled = 0;
      bland = false;
    } else if (++stalled > stall_limit) {
      bland = true;
    }
  }
}

double Simplex::DualInfeasibility() {
  Eigen::VectorXd y(m_);
  for (int i = 0; i < m_; ++i) y[i] = cost_[head_[i]];
  if (m_ > 0) Btran(y);
  double worst = 0.0;
  for (int j = 0; j < total_; ++j) {
    if (place_[j] == Place::kBasic || lower_[j] == upper_[j]) continue;
    const double d = cost_[j] - (m_ > 0 ? ColumnDot(j, y) : 0.0);
    switch (place_[j]) {
      case Place::kLower: worst = std::max(worst, -d); break;
      case Place::kUpper: worst = std::max(worst, d); break;
      case Place::kFree: worst = std::max(worst, std::abs(d)); break;
      case Place::kBasic: break;
    }
  }
  return worst;
}

Solution Simplex::Finish(SolveStatus status, const std::string& message) {
  Solution s;
  s.status = status;
  s.message = message;
  s.iterations = iterations_;
  s.values.assign(x_.begin(), x_.begin() + n_);
  s.objective = model_.EvaluateObjective(s.values);
  double worst = 0.0;
  for (int i = 0; i < m_; ++i) {
    worst = std::max(worst, model_.RowViolation(i, s.values));
  }
  for (int j = 0; j < n_; ++j) {
    worst = std::max(worst, model_.lower(j) - s.values[j]);
    worst = std::max(worst, s.values[j] - model_.upper(j));
  }
  s.max_primal_residual = worst;
  return s;
}

Solution Simplex::Run() {
  BuildColumns();
  InitialBasis();

  if (m_ == 0) {
    for (int j = 0; j < n_; ++j) {
      const double c = model_.objective(j);
      if (c > 0.0 && !std::isfinite(lower_[j])) {
        return Finish(SolveStatus::kUnbounded, "column " + model_.column_name(j));
      }
      if (c < 0.0 && !std::isfinite(upper_[j])) {
        return Finish(SolveStatus::kUnbounded, "column " + model_.column_name(j));
      }
      if (c > 0.0) x_[j] = lower_[j];
      if (c < 0.0) x_[j] = upper_[j];
    }
    return Finish(SolveStatus::kOptimal, "");
  }

  auto failure = [&](Outcome o, const char* phase) {
    switch (o) {
      case Outcome::kIterationLimit:
        return Finish(SolveStatus::kIterationLimit,
                      std::string("iteration limit in ") + phase);
      case Outcome::kNumerical:
        return Finish(SolveStatus::kNumericalError,
                      std::string("singular basis in ") + phase);
      default:
        return Finish(SolveStatus::kUnbounded, "unbounded");
    }
  };

  if (total_ > n_ + m_) {
    cost_.assign(total_, 0.0);
    for (int j = n_ + m_; j < total_; ++j) cost_[j] = 1.0;
    const Outcome o = Iterate();
    if (o == Outcome::kUnbounded) {
      return Finish(SolveStatus::kNumericalError, "phase one unbounded");
    }
    if (o != Outcome::kOptimal) return failure(o, "phase one");
    int worst_row = -1;
    double worst = options_.feas_tol;
    for (int j = n_ + m_; j < total_; ++j) {
      if (x_[j] > worst) {
        worst = x_[j];
        worst_row = art_row_[j - n_ - m_];
      }
    }
    if (worst_row >= 0) {
      Solution s = Finish(SolveStatus::kInfeasible,
                          "row '" + model_.row(worst_row).name +
                              "' cannot be satisfied");
      s.certificate_row = worst_row;
      return s;
    }
    for (int j = n_ + m_; j < total_; ++j) {
      upper_[j] = 0.0;
      if (place_[j] != Place::kBasic) {
        x_[j] = 0.0;
        place_[j] = Place::kLower;
      }
    }
  }

  cost_.assign(total_, 0.0);
  for (int j = 0; j < n_; ++j) cost_[j] = model_.objective(j);
  const Outcome o = Iterate();
  if (o != Outcome::kOptimal) return failure(o, "phase two");
  Solution s = Finish(SolveStatus::kOptimal, "");
  s.max_dual_infeasibility = DualInfeasibility();
  return s;
}

}  // namespace

const char* StatusName(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal: return "optimal";
    case SolveStatus::kInfeasible: return "infeasible";
    case SolveStatus::kUnbounded: return "unbounded";
    case SolveStatus::kIterationLimit: return "iteration_limit";
    case SolveStatus::kNumericalError: return "numerical_error";
  }
  return "unknown";
}

Solution Solve(const ModelInstance& model, const SolverOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Simplex simplex(model, options);
  Solution s = simplex.Run();
  s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
  return s;
}

}  // namespace hessco
