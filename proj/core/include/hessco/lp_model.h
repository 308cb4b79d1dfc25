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

#ifndef HESSCO_LP_MODEL_H_
#define HESSCO_LP_MODEL_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

namespace hessco {

enum class Sense { kLessEqual, kEqual, kGreaterEqual };

// Constraint families, used for verification reports.
enum class RowFamily {
  kGeneric,
  kBalance,
  kSourceLimit,
  kStorageLimit,
  kDynamics,
  kPeriodicity,
  kAbsSwing,
  kMcCormick,
  kThroughput,
  kCapex,
  kPeak,
};

const char* FamilyName(RowFamily family);

// Replaces whitespace so the name survives whitespace-delimited formats.
std::string SafeName(std::string name);

struct Term {
  int column = 0;
  double coefficient = 0.0;

  bool operator==(const Term&) const = default;
};

struct Row {
  std::string name;
  RowFamily family = RowFamily::kGeneric;
  Sense sense = Sense::kEqual;
  double rhs = 0.0;
  // Sorted by column, no duplicates, no zeros.
  std::vector<Term> terms;
};

// A sparse linear program: minimise c'x + constant subject to rows and
// column bounds. Infinite bounds use +-HUGE_VAL.
class ModelInstance {
 public:
  int AddColumn(std::string name, double lower, double upper);
  // Terms are sorted and merged; zero coefficients are dropped.
  int AddRow(std::string name, RowFamily family, Sense sense, double rhs,
             std::vector<Term> terms);
  // Accumulates into the objective coefficient of `column`.
  void AddObjective(int column, double coefficient);
  void AddObjectiveConstant(double value) { objective_constant_ += value; }
  void SetBounds(int column, double lower, double upper);

  int num_columns() const { return static_cast<int>(lower_.size()); }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  long num_nonzeros() const;

  const std::string& column_name(int j) const { return column_names_[j]; }
  double lower(int j) const { return lower_[j]; }
  double upper(int j) const { return upper_[j]; }
  double objective(int j) const { return objective_[j]; }
  double objective_constant() const { return objective_constant_; }
  const std::vector<double>& objective() const { return objective_; }
  const Row& row(int i) const { return rows_[i]; }
  const std::vector<Row>& rows() const { return rows_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  double EvaluateObjective(std::span<const double> x) const;
  double RowActivity(int i, std::span<const double> x) const;
  // Amount by which row i is violated at x (0 when satisfied).
  double RowViolation(int i, std::span<const double> x) const;

  // Throws ValidationError on non-finite coefficients, empty rows or
  // inverted bounds.
  void Validate() const;

  // Same names, bounds, objective and rows (families are ignored).
  bool SameStructure(const ModelInstance& other) const;

 private:
  std::string name_ = "model";
  std::vector<std::string> column_names_;
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<double> objective_;
  double objective_constant_ = 0.0;
  std::vector<Row> rows_;
};

// Semantic role of a column in the design model.
enum class VarKind {
  kSourcePlus,       // grid import, grid side
  kSourceMinus,      // grid export, grid side
  kPvOutput,         // PV generation before conversion
  kEssPlus,          // storage discharge, bus side
  kEssMinus,         // storage charge, bus side
  kStateOfEnergy,
  kEnergyCapacity,
  kEssPowerCapacity,
  kSourceCapacity,
  kCRate,
  kSwing,            // |E_{k+1} - E_k| epigraph
  kThroughput,
  kPeakImport,
  kCapexEpigraph,
};

const char* KindName(VarKind kind);

struct VariableRef {
  VarKind kind;
  std::string entity;
  int step = -1;  // -1 for design variables
  int column = -1;
};

// Bijection between (kind, entity, step) and LP columns.
class VariableRegistry {
 public:
  int Register(ModelInstance& model, VarKind kind, const std::string& entity,
               int step, double lower, double upper);
  std::optional<int> Find(VarKind kind, const std::string& entity,
                          int step = -1) const;
  // Throws std::out_of_range when absent.
  int At(VarKind kind, const std::string& entity, int step = -1) const;
  const std::vector<VariableRef>& refs() const { return refs_; }
  const VariableRef& ref(int column) const { return refs_[column]; }

 private:
  std::map<std::tuple<VarKind, std::string, int>, int> index_;
  std::vector<VariableRef> refs_;
};

}  // namespace hessco

#endif  // HESSCO_LP_MODEL_H_
