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

#include "hessco/dataset.h"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string_view>

#include "hessco/error.h"

namespace hessco {
namespace {

struct ColumnSpec {
  std::string name;
  // Accepted unit tokens and the factor converting each to internal units.
  std::vector<std::pair<std::string, double>> units;
  double min_value = -HUGE_VAL;
  double max_value = HUGE_VAL;
  std::string range_message = "value out of range";
};

// One signal file: per date, per column, per step.
using DayColumns = std::vector<std::vector<std::optional<double>>>;

struct SeriesFile {
  std::string path;
  std::map<CalendarDate, DayColumns> days;
};

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> SplitCsv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(Trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

bool ParseInt(std::string_view s, int& out) {
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool ParseDouble(std::string_view s, double& out) {
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

// Parses "YYYY-MM-DDTHH:MM[:SS][Z|+00:00]" into a date and minute of day.
bool ParseTimestamp(std::string_view s, CalendarDate& date, int& minute) {
  if (s.size() < 16 || s[4] != '-' || s[7] != '-' ||
      (s[10] != 'T' && s[10] != ' ') || s[13] != ':') {
    return false;
  }
  int hour = 0, min = 0;
  if (!ParseInt(s.substr(0, 4), date.year) ||
      !ParseInt(s.substr(5, 2), date.month) ||
      !ParseInt(s.substr(8, 2), date.day) ||
      !ParseInt(s.substr(11, 2), hour) || !ParseInt(s.substr(14, 2), min)) {
    return false;
  }
  std::string_view rest = s.substr(16);
  if (!rest.empty() && rest.front() == ':') {
    int sec = 0;
    if (rest.size() < 3 || !ParseInt(rest.substr(1, 2), sec) || sec != 0) {
      return false;
    }
    rest.remove_prefix(3);
  }
  if (rest == "Z" || rest == "+00:00") rest = {};
  if (!rest.empty()) return false;
  if (!date.IsValid() || hour < 0 || hour > 23 || min < 0 || min > 59) {
    return false;
  }
  minute = hour * 60 + min;
  return true;
}

// Splits a header cell "name[unit]".
bool SplitHeader(std::string_view cell, std::string_view& name,
                 std::string_view& unit) {
  const std::size_t open = cell.find('[');
  if (open == std::string_view::npos || cell.back() != ']') return false;
  name = Trim(cell.substr(0, open));
  unit = cell.substr(open + 1, cell.size() - open - 2);
  return true;
}

SeriesFile ReadSeries(const std::string& path,
                      const std::vector<ColumnSpec>& columns,
                      int tau_minutes) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  const int steps = 1440 / tau_minutes;

  SeriesFile file;
  file.path = path;
  std::string raw;
  int line_no = 0;
  std::vector<double> scale(columns.size(), 1.0);
  bool have_header = false;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto cells = SplitCsv(line);

    if (!have_header) {
      if (cells.size() != columns.size() + 1 || cells[0] != "timestamp") {
        throw ParseError(path, line_no,
                         "unit header mismatch: expected timestamp plus " +
                             std::to_string(columns.size()) + " column(s)");
      }
      for (std::size_t c = 0; c < columns.size(); ++c) {
        std::string_view name, unit;
        if (!SplitHeader(cells[c + 1], name, unit) ||
            name != columns[c].name) {
          throw ParseError(path, line_no,
                           "unit header mismatch: expected column '" +
                               columns[c].name + "[unit]'");
        }
        bool found = false;
        for (const auto& [token, factor] : columns[c].units) {
          if (unit == token) {
            scale[c] = factor;
            found = true;
          }
        }
        if (!found) {
          throw ParseError(path, line_no,
                           "unit header mismatch: unsupported unit '" +
                               std::string(unit) + "' for " +
                               columns[c].name);
        }
      }
      have_header = true;
      continue;
    }

    if (cells.size() != columns.size() + 1) {
      throw ParseError(path, line_no,
                       "malformed row: expected " +
                           std::to_string(columns.size() + 1) + " fields");
    }
    CalendarDate date;
    int minute = 0;
    if (!ParseTimestamp(cells[0], date, minute)) {
      throw ParseError(path, line_no,
                       "malformed row: bad timestamp '" +
                           std::string(cells[0]) + "'");
    }
    if (minute % tau_minutes != 0) {
      throw ParseError(path, line_no,
                       "malformed row: timestamp not aligned to " +
                           std::to_string(tau_minutes) + "-minute steps");
    }
    const int step = minute / tau_minutes;
    auto [it, inserted] = file.days.try_emplace(date);
    if (inserted) {
      it->second.assign(columns.size(),
                        std::vector<std::optional<double>>(steps));
    }
    for (std::size_t c = 0; c < columns.size(); ++c) {
      double value = 0.0;
      if (!ParseDouble(cells[c + 1], value)) {
        throw ParseError(path, line_no,
                         "malformed row: bad value '" +
                             std::string(cells[c + 1]) + "'");
      }
      value *= scale[c];
      if (value < columns[c].min_value || value > columns[c].max_value) {
        throw ParseError(path, line_no, columns[c].range_message);
      }
      auto& slot = it->second[c][step];
      if (slot.has_value()) {
        throw ParseError(path, line_no, "malformed row: duplicate timestamp");
      }
      slot = value;
    }
  }
  if (!have_header) throw ParseError(path, 0, "missing header row");
  return file;
}

bool IsComplete(const SeriesFile& file, const CalendarDate& date) {
  const auto it = file.days.find(date);
  if (it == file.days.end()) return false;
  for (const auto& column : it->second) {
    for (const auto& v : column) {
      if (!v.has_value()) return false;
    }
  }
  return true;
}

std::vector<double> Column(const SeriesFile& file, const CalendarDate& date,
                           std::size_t c) {
  std::vector<double> out;
  for (const auto& v : file.days.at(date)[c]) out.push_back(*v);
  return out;
}

std::string Timestamp(const CalendarDate& date, int minute) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%sT%02d:%02d", date.ToString().c_str(),
                minute / 60, minute % 60);
  return buf;
}

std::string Exact(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::ofstream OpenForWrite(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  return out;
}

}  // namespace

Dataset LoadDataset(const DatasetFiles& files, int tau_minutes) {
  if (tau_minutes <= 0 || 1440 % tau_minutes != 0) {
    throw ValidationError("tau_minutes must divide 1440");
  }
  const SeriesFile prices = ReadSeries(
      files.prices, {{"price", {{"EUR/MWh", 1e-3}, {"kEUR/MWh", 1.0}}}},
      tau_minutes);
  const SeriesFile demand = ReadSeries(
      files.demand,
      {{"charging", {{"MW", 1.0}, {"kW", 1e-3}}, 0.0, HUGE_VAL,
        "negative demand"},
       {"warehouse", {{"MW", 1.0}, {"kW", 1e-3}}, 0.0, HUGE_VAL,
        "negative demand"}},
      tau_minutes);
  const SeriesFile pv =
      ReadSeries(files.pv,
                 {{"pv", {{"cf", 1.0}}, 0.0, 1.0,
                   "capacity factor out of range"}},
                 tau_minutes);

  std::map<CalendarDate, bool> all_dates;
  for (const SeriesFile* f : {&prices, &demand, &pv}) {
    for (const auto& [date, unused] : f->days) all_dates[date] = true;
  }

  Dataset out;
  const int steps = 1440 / tau_minutes;
  std::size_t index = 0;
  for (const auto& [date, unused] : all_dates) {
    const bool at_end = index == 0 || index + 1 == all_dates.size();
    ++index;
    const SeriesFile* incomplete = nullptr;
    for (const SeriesFile* f : {&prices, &demand, &pv}) {
      if (!IsComplete(*f, date)) {
        incomplete = f;
        break;
      }
    }
    if (incomplete != nullptr) {
      if (at_end) {
        out.warnings.push_back("dropped partial day " + date.ToString());
        continue;
      }
      throw ParseError(incomplete->path, 0,
                       "gap inside day " + date.ToString());
    }
    HistoricalDay day;
    day.date = date;
    day.price = Column(prices, date, 0);
    day.demand_ch = Column(demand, date, 0);
    day.demand_wh = Column(demand, date, 1);
    day.pv_cf = Column(pv, date, 0);
    day.Validate(steps);
    out.days.push_back(std::move(day));
  }
  return out;
}

void WriteDataset(const std::vector<HistoricalDay>& days,
                  const DatasetFiles& files, int tau_minutes) {
  std::ofstream prices = OpenForWrite(files.prices);
  std::ofstream demand = OpenForWrite(files.demand);
  std::ofstream pv = OpenForWrite(files.pv);
  prices << "timestamp,price[kEUR/MWh]\n";
  demand << "timestamp,charging[MW],warehouse[MW]\n";
  pv << "timestamp,pv[cf]\n";
  for (const HistoricalDay& day : days) {
    for (std::size_t k = 0; k < day.price.size(); ++k) {
      const std::string ts =
          Timestamp(day.date, static_cast<int>(k) * tau_minutes);
      prices << ts << ',' << Exact(day.price[k]) << '\n';
      demand << ts << ',' << Exact(day.demand_ch[k]) << ','
             << Exact(day.demand_wh[k]) << '\n';
      pv << ts << ',' << Exact(day.pv_cf[k]) << '\n';
    }
  }
  for (std::ofstream* f : {&prices, &demand, &pv}) {
    f->flush();
    if (!*f) throw Error("write failed");
  }
}

std::uint64_t HashDays(const std::vector<HistoricalDay>& days) {
  std::uint64_t h = 14695981039346656037ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  for (const HistoricalDay& d : days) {
    mix(static_cast<std::uint64_t>(d.date.year * 10000 + d.date.month * 100 +
                                   d.date.day));
    for (const auto* series :
         {&d.price, &d.demand_ch, &d.demand_wh, &d.pv_cf}) {
      mix(series->size());
      for (double v : *series) mix(std::bit_cast<std::uint64_t>(v));
    }
  }
  return h;
}

}  // namespace hessco
