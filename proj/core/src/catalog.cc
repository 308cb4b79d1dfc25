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

#include "hessco/catalog.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string_view>

#include "hessco/error.h"

namespace hessco {
namespace {

struct FieldSpec {
  const char* key;
  double EssSpec::*member;
  // Unit token -> factor to internal units; the empty token is the
  // internal unit itself.
  std::vector<std::pair<std::string_view, double>> units;
};

const std::vector<FieldSpec>& Fields() {
  static const std::vector<FieldSpec> kFields = {
      {"eta_c", &EssSpec::eta_charge, {{"", 1.0}, {"%", 0.01}}},
      {"eta_d", &EssSpec::eta_discharge, {{"", 1.0}, {"%", 0.01}}},
      {"cost_energy",
       &EssSpec::cost_energy,
       {{"", 1.0}, {"kEUR/MWh", 1.0}, {"EUR/kWh", 1.0}, {"EUR/MWh", 1e-3}}},
      {"cost_power",
       &EssSpec::cost_power,
       {{"", 1.0}, {"kEUR/MW", 1.0}, {"EUR/kW", 1.0}, {"EUR/MW", 1e-3}}},
      {"om_energy",
       &EssSpec::om_energy,
       {{"", 1.0}, {"kEUR/MWh", 1.0}, {"EUR/kWh", 1.0}, {"EUR/MWh", 1e-3}}},
      {"om_power",
       &EssSpec::om_power,
       {{"", 1.0}, {"kEUR/MW/yr", 1.0}, {"EUR/kW/yr", 1.0}}},
      {"e_cap_max", &EssSpec::energy_ceiling,
       {{"", 1.0}, {"MWh", 1.0}, {"kWh", 1e-3}}},
      {"p_cap_max", &EssSpec::power_ceiling,
       {{"", 1.0}, {"MW", 1.0}, {"kW", 1e-3}}},
      {"c_rate_max", &EssSpec::crate_ceiling, {{"", 1.0}}},
      {"dod_min", &EssSpec::dod_min_fraction, {{"", 1.0}, {"%", 0.01}}},
      {"cycle_life", &EssSpec::cycle_life, {{"", 1.0}}},
      {"resale_factor", &EssSpec::resale_factor, {{"", 1.0}, {"%", 0.01}}},
  };
  return kFields;
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

struct Record {
  std::string name;
  int line = 0;
  std::map<std::string, std::pair<double, int>> values;  // key -> (v, line)
};

EssSpec Finish(const Record& record, const std::string& source) {
  EssSpec spec;
  spec.name = record.name;
  for (const FieldSpec& field : Fields()) {
    const auto it = record.values.find(field.key);
    if (it == record.values.end()) {
      throw ParseError(source, record.line,
                       "record '" + record.name + "': missing field '" +
                           field.key + "'");
    }
    spec.*field.member = it->second.first;
  }
  try {
    spec.Validate();
  } catch (const ValidationError& e) {
    throw ParseError(source, record.line, e.what());
  }
  return spec;
}

}  // namespace

Catalog::Catalog(std::vector<EssSpec> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i].Validate();
    for (std::size_t j = 0; j < i; ++j) {
      if (entries_[j].name == entries_[i].name) {
        throw ConfigError("duplicate storage name '" + entries_[i].name + "'");
      }
    }
  }
}

const EssSpec* Catalog::Find(const std::string& name) const {
  for (const EssSpec& e : entries_) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

const EssSpec& Catalog::At(const std::string& name) const {
  const EssSpec* e = Find(name);
  if (e == nullptr) throw ConfigError("unknown storage '" + name + "'");
  return *e;
}

std::vector<EssSpec> Catalog::Subset(
    const std::vector<std::string>& names) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    At(names[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (names[i] == names[j]) {
        throw ConfigError("storage '" + names[i] + "' listed twice");
      }
    }
  }
  std::vector<EssSpec> out;
  for (const EssSpec& e : entries_) {
    for (const std::string& n : names) {
      if (n == e.name) out.push_back(e);
    }
  }
  return out;
}

Catalog ParseCatalog(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  std::vector<EssSpec> entries;
  std::optional<Record> current;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) {
        throw ParseError(source, line_no, "malformed record header");
      }
      if (current) entries.push_back(Finish(*current, source));
      current = Record{std::string(Trim(line.substr(1, line.size() - 2))),
                       line_no,
                       {}};
      continue;
    }
    if (!current) {
      throw ParseError(source, line_no, "field outside of a [record]");
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(source, line_no, "expected 'key = value'");
    }
    const std::string key(Trim(line.substr(0, eq)));
    std::string_view rhs = Trim(line.substr(eq + 1));
    const FieldSpec* field = nullptr;
    for (const FieldSpec& f : Fields()) {
      if (key == f.key) field = &f;
    }
    if (field == nullptr) {
      throw ParseError(source, line_no,
                       "record '" + current->name + "': unknown field '" +
                           key + "'");
    }
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(rhs.data(), rhs.data() + rhs.size(), value);
    if (ec != std::errc() || !std::isfinite(value)) {
      throw ParseError(source, line_no,
                       "record '" + current->name + "': field '" + key +
                           "' is not a number");
    }
    const std::string_view unit =
        Trim(rhs.substr(static_cast<std::size_t>(ptr - rhs.data())));
    bool known = false;
    for (const auto& [token, factor] : field->units) {
      if (unit == token) {
        value *= factor;
        known = true;
      }
    }
    if (!known) {
      throw ParseError(source, line_no,
                       "record '" + current->name + "': field '" + key +
                           "' has unsupported unit '" + std::string(unit) +
                           "'");
    }
    if (!current->values.emplace(key, std::make_pair(value, line_no))
             .second) {
      throw ParseError(source, line_no,
                       "record '" + current->name + "': duplicate field '" +
                           key + "'");
    }
  }
  if (current) entries.push_back(Finish(*current, source));
  if (entries.empty()) throw ParseError(source, 0, "catalog has no records");
  try {
    return Catalog(std::move(entries));
  } catch (const ConfigError& e) {
    throw ParseError(source, 0, e.what());
  }
}

Catalog LoadCatalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseCatalog(buffer.str(), path);
}

Catalog CaseStudyCatalog() {
  auto make = [](std::string name, double eta_c, double eta_d, double c_e,
                 double c_p, double om_e, double om_p, double e_max,
                 double p_max, double r_max, double dod, double cycles) {
    EssSpec s;
    s.name = std::move(name);
    s.eta_charge = eta_c;
    s.eta_discharge = eta_d;
    s.cost_energy = c_e;
    s.cost_power = c_p;
    s.om_energy = om_e;
    s.om_power = om_p;
    s.energy_ceiling = e_max;
    s.power_ceiling = p_max;
    s.crate_ceiling = r_max;
    s.dod_min_fraction = dod;
    s.cycle_life = cycles;
    s.resale_factor = 0.85;
    return s;
  };
  return Catalog({
      make("B", 0.83, 0.88, 900, 1590, 3, 30, 5.0, 10, 3, 0.15, 5000),
      make("S", 0.95, 0.97, 1150, 350, 5, 6, 0.2, 30, 100, 0.0, 500000),
      make("F", 0.85, 0.93, 3000, 300, 10, 20, 0.5, 20, 10, 0.0, 100000),
  });
}

}  // namespace hessco
