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

#include "hessco/lp_model.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hessco/error.h"

namespace hessco {

const char* FamilyName(RowFamily family) {
  switch (family) {
    case RowFamily::kGeneric: return "generic";
    case RowFamily::kBalance: return "balance";
    case RowFamily::kSourceLimit: return "source_limit";
    case RowFamily::kStorageLimit: return "storage_limit";
    case RowFamily::kDynamics: return "dynamics";
    case RowFamily::kPeriodicity: return "periodicity";
    case RowFamily::kAbsSwing: return "abs_swing";
    case RowFamily::kMcCormick: return "mccormick";
    case RowFamily::kThroughput: return "throughput";
    case RowFamily::kCapex: return "capex";
    case RowFamily::kPeak: return "peak";
  }
  return "unknown";
}

const char* KindName(VarKind kind) {
  switch (kind) {
    case VarKind::kSourcePlus: return "P_src_plus";
    case VarKind::kSourceMinus: return "P_src_minus";
    case VarKind::kPvOutput: return "P_pv";
    case VarKind::kEssPlus: return "P_ess_plus";
    case VarKind::kEssMinus: return "P_ess_minus";
    case VarKind::kStateOfEnergy: return "E_soe";
    case VarKind::kEnergyCapacity: return "E_max";
    case VarKind::kEssPowerCapacity: return "P_max_ess";
    case VarKind::kSourceCapacity: return "P_max_src";
    case VarKind::kCRate: return "R_crate";
    case VarKind::kSwing: return "q_aux";
    case VarKind::kThroughput: return "Q_throughput";
    case VarKind::kPeakImport: return "P_peak";
    case VarKind::kCapexEpigraph: return "capex_epigraph";
  }
  return "unknown";
}

std::string SafeName(std::string name) {
  for (char& c : name) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') c = '_';
  }
  return name;
}

int ModelInstance::AddColumn(std::string name, double lower, double upper) {
  column_names_.push_back(std::move(name));
  lower_.push_back(lower);
  upper_.push_back(upper);
  objective_.push_back(0.0);
  return num_columns() - 1;
}

int ModelInstance::AddRow(std::string name, RowFamily family, Sense sense,
                          double rhs, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.column < b.column; });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (const Term& t : terms) {
    if (t.column < 0 || t.column >= num_columns()) {
      throw std::out_of_range("row '" + name + "' references column " +
                              std::to_string(t.column));
    }
    if (!merged.empty() && merged.back().column == t.column) {
      merged.back().coefficient += t.coefficient;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coefficient == 0.0; });
  rows_.push_back(Row{std::move(name), family, sense, rhs, std::move(merged)});
  return num_rows() - 1;
}

void ModelInstance::AddObjective(int column, double coefficient) {
  objective_.at(column) += coefficient;
}

void ModelInstance::SetBounds(int column, double lower, double upper) {
  lower_.at(column) = lower;
  upper_.at(column) = upper;
}

long ModelInstance::num_nonzeros() const {
  long n = 0;
  for (const Row& r : rows_) n += static_cast<long>(r.terms.size());
  return n;
}

double ModelInstance::EvaluateObjective(std::span<const double> x) const {
  double sum = objective_constant_;
  for (int j = 0; j < num_columns(); ++j) sum += objective_[j] * x[j];
  return sum;
}

double ModelInstance::RowActivity(int i, std::span<const double> x) const {
  double sum = 0.0;
  for (const Term& t : rows_[i].terms) sum += t.coefficient * x[t.column];
  return sum;
}

double ModelInstance::RowViolation(int i, std::span<const double> x) const {
  const double a = RowActivity(i, x);
  const Row& r = rows_[i];
  switch (r.sense) {
    case Sense::kLessEqual: return std::max(0.0, a - r.rhs);
    case Sense::kGreaterEqual: return std::max(0.0, r.rhs - a);
    case Sense::kEqual: return std::abs(a - r.rhs);
  }
  return 0.0;
}

void ModelInstance::Validate() const {
  for (int j = 0; j < num_columns(); ++j) {
    if (std::isnan(lower_[j]) || std::isnan(upper_[j]) ||
        lower_[j] > upper_[j] || lower_[j] == HUGE_VAL ||
        upper_[j] == -HUGE_VAL) {
      throw ValidationError("column '" + column_names_[j] +
                            "' has invalid bounds");
    }
    if (!std::isfinite(objective_[j])) {
      throw ValidationError("column '" + column_names_[j] +
                            "' has a non-finite cost");
    }
  }
  if (!std::isfinite(objective_constant_)) {
    throw ValidationError("non-finite objective constant");
  }
  for (const Row& r : rows_) {
    if (r.terms.empty()) throw ValidationError("row '" + r.name + "' is empty");
    if (!std::isfinite(r.rhs)) {
      throw ValidationError("row '" + r.name + "' has a non-finite rhs");
    }
    for (const Term& t : r.terms) {
      if (!std::isfinite(t.coefficient)) {
        throw ValidationError("row '" + r.name +
                              "' has a non-finite coefficient");
      }
    }
  }
}

bool ModelInstance::SameStructure(const ModelInstance& o) const {
  if (column_names_ != o.column_names_ || lower_ != o.lower_ ||
      upper_ != o.upper_ || objective_ != o.objective_ ||
      objective_constant_ != o.objective_constant_ ||
      rows_.size() != o.rows_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Row& a = rows_[i];
    const Row& b = o.rows_[i];
    if (a.name != b.name || a.sense != b.sense || a.rhs != b.rhs ||
        a.terms != b.terms) {
      return false;
    }
  }
  return true;
}

int VariableRegistry::Register(ModelInstance& model, VarKind kind,
                               const std::string& entity, int step,
                               double lower, double upper) {
  const auto key = std::make_tuple(kind, entity, step);
  if (index_.count(key) != 0) {
    throw std::logic_error(std::string("duplicate variable ") +
                           KindName(kind) + "[" + entity + "]");
  }
  std::string name = std::string(KindName(kind)) + "[" + SafeName(entity);
  if (step >= 0) name += "," + std::to_string(step);
  name += "]";
  const int column = model.AddColumn(std::move(name), lower, upper);
  if (column != static_cast<int>(refs_.size())) {
    throw std::logic_error("registry out of sync with model columns");
  }
  index_.emplace(key, column);
  refs_.push_back(VariableRef{kind, entity, step, column});
  return column;
}

std::optional<int> VariableRegistry::Find(VarKind kind,
                                          const std::string& entity,
                                          int step) const {
  const auto it = index_.find(std::make_tuple(kind, entity, step));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int VariableRegistry::At(VarKind kind, const std::string& entity,
                         int step) const {
  const auto found = Find(kind, entity, step);
  if (!found) {
    throw std::out_of_range(std::string("no variable ") + KindName(kind) +
                            "[" + entity + "," + std::to_string(step) + "]");
  }
  return *found;
}

}  // namespace hessco
