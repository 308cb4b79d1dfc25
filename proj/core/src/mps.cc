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

#include "hessco/mps.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "hessco/error.h"

namespace hessco {
namespace {

constexpr const char* kObjective = "OBJ";

std::string Num(double v) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, v);
  return std::string(buffer, result.ptr);
}

char SenseCode(Sense s) {
  switch (s) {
    case Sense::kLessEqual: return 'L';
    case Sense::kGreaterEqual: return 'G';
    case Sense::kEqual: return 'E';
  }
  return 'E';
}

}  // namespace

void WriteMps(const ModelInstance& model, std::ostream& out) {
  const int n = model.num_columns();
  std::vector<std::vector<std::pair<int, double>>> by_column(n);
  for (int i = 0; i < model.num_rows(); ++i) {
    for (const Term& t : model.row(i).terms) {
      by_column[t.column].emplace_back(i, t.coefficient);
    }
  }

  out << "NAME " << SafeName(model.name()) << "\n";
  out << "ROWS\n";
  out << " N " << kObjective << "\n";
  for (const Row& r : model.rows()) {
    out << " " << SenseCode(r.sense) << " " << r.name << "\n";
  }

  out << "COLUMNS\n";
  for (int j = 0; j < n; ++j) {
    const std::string& name = model.column_name(j);
    if (model.objective(j) != 0.0 || by_column[j].empty()) {
      out << " " << name << " " << kObjective << " " << Num(model.objective(j))
          << "\n";
    }
    for (const auto& [i, v] : by_column[j]) {
      out << " " << name << " " << model.row(i).name << " " << Num(v) << "\n";
    }
  }

  out << "RHS\n";
  if (model.objective_constant() != 0.0) {
    out << " RHS " << kObjective << " " << Num(-model.objective_constant())
        << "\n";
  }
  for (const Row& r : model.rows()) {
    if (r.rhs != 0.0) out << " RHS " << r.name << " " << Num(r.rhs) << "\n";
  }

  out << "BOUNDS\n";
  for (int j = 0; j < n; ++j) {
    const std::string& name = model.column_name(j);
    const double lo = model.lower(j);
    const double hi = model.upper(j);
    if (lo == hi) {
      out << " FX BND " << name << " " << Num(lo) << "\n";
      continue;
    }
    if (std::isinf(lo) && std::isinf(hi)) {
      out << " FR BND " << name << "\n";
      continue;
    }
    if (std::isinf(lo)) {
      out << " MI BND " << name << "\n";
    } else if (lo != 0.0 || hi < 0.0) {
      out << " LO BND " << name << " " << Num(lo) << "\n";
    }
    if (!std::isinf(hi)) out << " UP BND " << name << " " << Num(hi) << "\n";
  }
  out << "ENDATA\n";
}

void ExportMps(const ModelInstance& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  WriteMps(model, out);
  out.flush();
  if (!out) throw Error("failed writing '" + path + "'");
}

ModelInstance ReadMps(std::istream& in, const std::string& source) {
  enum class Section { kNone, kRows, kColumns, kRhs, kRanges, kBounds, kDone };
  Section section = Section::kNone;
  ModelInstance model;
  std::string objective_row;
  std::map<std::string, int> row_index;
  std::map<std::string, int> column_index;
  std::vector<std::string> row_names;
  std::vector<Sense> senses;
  std::vector<double> rhs;
  std::vector<std::vector<Term>> terms;

  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError(source, line_no, what);
  };
  auto number = [&](const std::string& text) {
    double v = 0.0;
    const char* end = text.data() + text.size();
    const auto result = std::from_chars(text.data(), end, v);
    if (result.ec != std::errc() || result.ptr != end) {
      fail("bad number '" + text + "'");
    }
    return v;
  };
  auto column_of = [&](const std::string& name) {
    const auto it = column_index.find(name);
    if (it == column_index.end()) fail("unknown column '" + name + "'");
    return it->second;
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '*') continue;
    std::istringstream fields(line);
    std::vector<std::string> f;
    for (std::string tok; fields >> tok;) f.push_back(tok);
    if (f.empty()) continue;

    if (line[0] != ' ' && line[0] != '\t') {
      const std::string& head = f[0];
      if (head == "NAME") {
        if (f.size() > 1) model.set_name(f[1]);
      } else if (head == "ROWS") {
        section = Section::kRows;
      } else if (head == "COLUMNS") {
        section = Section::kColumns;
      } else if (head == "RHS") {
        section = Section::kRhs;
      } else if (head == "BOUNDS") {
        section = Section::kBounds;
        for (std::size_t i = 0; i < row_names.size(); ++i) {
          model.AddRow(row_names[i], RowFamily::kGeneric, senses[i], rhs[i],
                       std::move(terms[i]));
        }
        row_names.clear();
      } else if (head == "RANGES") {
        section = Section::kRanges;
      } else if (head == "ENDATA") {
        section = Section::kDone;
        break;
      } else {
        fail("unknown section '" + head + "'");
      }
      continue;
    }

    switch (section) {
      case Section::kRows: {
        if (f.size() != 2) fail("malformed ROWS entry");
        if (f[0] == "N") {
          if (!objective_row.empty()) fail("second objective row");
          objective_row = f[1];
          continue;
        }
        Sense s;
        if (f[0] == "L") {
          s = Sense::kLessEqual;
        } else if (f[0] == "G") {
          s = Sense::kGreaterEqual;
        } else if (f[0] == "E") {
          s = Sense::kEqual;
        } else {
          fail("unknown row type '" + f[0] + "'");
        }
        if (!row_index.emplace(f[1], static_cast<int>(senses.size())).second) {
          fail("duplicate row '" + f[1] + "'");
        }
        row_names.push_back(f[1]);
        senses.push_back(s);
        rhs.push_back(0.0);
        terms.emplace_back();
        break;
      }
      case Section::kColumns: {
        if (f.size() >= 2 && f[1] == "'MARKER'") {
          fail("integer markers are not supported");
        }
        if (f.size() != 3 && f.size() != 5) fail("malformed COLUMNS entry");
        int column;
        const auto it = column_index.find(f[0]);
        if (it == column_index.end()) {
          column = model.AddColumn(f[0], 0.0, HUGE_VAL);
          column_index.emplace(f[0], column);
        } else {
          column = it->second;
          if (column != model.num_columns() - 1) {
            fail("column '" + f[0] + "' is not contiguous");
          }
        }
        for (std::size_t p = 1; p + 1 < f.size(); p += 2) {
          const double v = number(f[p + 1]);
          if (f[p] == objective_row) {
            model.AddObjective(column, v);
            continue;
          }
          const auto row = row_index.find(f[p]);
          if (row == row_index.end()) fail("unknown row '" + f[p] + "'");
          terms[row->second].push_back({column, v});
        }
        break;
      }
      case Section::kRhs: {
        if (f.size() != 3 && f.size() != 5) fail("malformed RHS entry");
        for (std::size_t p = 1; p + 1 < f.size(); p += 2) {
          const double v = number(f[p + 1]);
          if (f[p] == objective_row) {
            model.AddObjectiveConstant(-v);
            continue;
          }
          const auto row = row_index.find(f[p]);
          if (row == row_index.end()) fail("unknown row '" + f[p] + "'");
          rhs[row->second] = v;
        }
        break;
      }
      case Section::kRanges:
        fail("ranged rows are not supported");
        break;
      case Section::kBounds: {
        if (f.size() < 3) fail("malformed BOUNDS entry");
        const int column = column_of(f[2]);
        double lo = model.lower(column);
        double hi = model.upper(column);
        const std::string& type = f[0];
        if (type == "FR" || type == "MI" || type == "PL") {
          if (f.size() != 3) fail("malformed BOUNDS entry");
          if (type == "FR") {
            lo = -HUGE_VAL;
            hi = HUGE_VAL;
          } else if (type == "MI") {
            lo = -HUGE_VAL;
          } else {
            hi = HUGE_VAL;
          }
        } else {
          if (f.size() != 4) fail("malformed BOUNDS entry");
          const double v = number(f[3]);
          if (type == "UP") {
            hi = v;
          } else if (type == "LO") {
            lo = v;
          } else if (type == "FX") {
            lo = v;
            hi = v;
          } else {
            fail("unsupported bound type '" + type + "'");
          }
        }
        model.SetBounds(column, lo, hi);
        break;
      }
      default:
        fail("data outside a section");
    }
  }
  if (section != Section::kDone) fail("missing ENDATA");
  if (!row_names.empty()) {
    for (std::size_t i = 0; i < row_names.size(); ++i) {
      model.AddRow(row_names[i], RowFamily::kGeneric, senses[i], rhs[i],
                   std::move(terms[i]));
    }
  }
  return model;
}

ModelInstance ReadMpsFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return ReadMps(in, path);
}

}  // namespace hessco
