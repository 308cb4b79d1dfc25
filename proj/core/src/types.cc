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

#include "hessco/types.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "hessco/error.h"

namespace hessco {
namespace {

void Require(bool ok, const std::string& message) {
  if (!ok) throw ValidationError(message);
}

bool IsFraction(double v) { return std::isfinite(v) && v > 0.0 && v <= 1.0; }
bool IsCost(double v) { return std::isfinite(v) && v >= 0.0; }

std::chrono::year_month_day ToChrono(const CalendarDate& d) {
  return std::chrono::year_month_day{
      std::chrono::year{d.year},
      std::chrono::month{static_cast<unsigned>(d.month)},
      std::chrono::day{static_cast<unsigned>(d.day)}};
}

CalendarDate FromChrono(const std::chrono::year_month_day& ymd) {
  return CalendarDate{static_cast<int>(ymd.year()),
                      static_cast<int>(static_cast<unsigned>(ymd.month())),
                      static_cast<int>(static_cast<unsigned>(ymd.day()))};
}

}  // namespace

void Horizon::Validate() const {
  Require(tau_minutes > 0 && 1440 % tau_minutes == 0,
          "horizon: tau_minutes must divide 1440, got " +
              std::to_string(tau_minutes));
  Require(synthetic_days >= 1, "horizon: synthetic_days must be >= 1");
  Require(years >= 1, "horizon: years must be >= 1");
  Require(std::isfinite(discount_rate) && discount_rate >= 0.0 &&
              discount_rate < 1.0,
          "horizon: discount_rate must lie in [0, 1)");
}

void EssSpec::Validate() const {
  const std::string where = "storage '" + name + "': ";
  Require(!name.empty(), "storage: empty name");
  Require(IsFraction(eta_charge), where + "eta_c must lie in (0, 1]");
  Require(IsFraction(eta_discharge), where + "eta_d must lie in (0, 1]");
  Require(IsCost(cost_energy), where + "cost_energy must be >= 0");
  Require(IsCost(cost_power), where + "cost_power must be >= 0");
  Require(IsCost(om_energy), where + "om_energy must be >= 0");
  Require(IsCost(om_power), where + "om_power must be >= 0");
  Require(IsCost(energy_ceiling), where + "e_cap_max must be >= 0");
  Require(IsCost(power_ceiling), where + "p_cap_max must be >= 0");
  Require(IsCost(crate_ceiling), where + "c_rate_max must be >= 0");
  Require(std::isfinite(dod_min_fraction) && dod_min_fraction >= 0.0 &&
              dod_min_fraction < 1.0,
          where + "dod_min must lie in [0, 1)");
  Require(std::isfinite(cycle_life) && cycle_life > 0.0,
          where + "cycle_life must be > 0");
  Require(std::isfinite(resale_factor) && resale_factor >= 0.0 &&
              resale_factor <= 1.0,
          where + "resale_factor must lie in [0, 1]");
}

void SourceSpec::Validate() const {
  Require(IsFraction(grid.eta_import), "grid: eta_import must lie in (0, 1]");
  Require(IsFraction(grid.eta_export), "grid: eta_export must lie in (0, 1]");
  Require(IsFraction(grid.f_sell), "grid: f_sell must lie in (0, 1]");
  Require(IsCost(grid.power_ceiling), "grid: power ceiling must be >= 0");
  Require(IsCost(grid.conn_fixed), "grid: conn_fixed must be >= 0");
  Require(IsCost(grid.tran_fixed), "grid: tran_fixed must be >= 0");
  Require(IsCost(grid.var_per_mw), "grid: var_per_mw must be >= 0");
  Require(IsCost(grid.peak_per_mw), "grid: peak_per_mw must be >= 0");
  Require(IsFraction(pv.eta), "pv: eta must lie in (0, 1]");
  Require(IsCost(pv.cost_per_mw), "pv: cost_per_mw must be >= 0");
  Require(IsCost(pv.om_per_mw_yr), "pv: om_per_mw_yr must be >= 0");
  Require(IsCost(pv.power_ceiling), "pv: power ceiling must be >= 0");
  Require(std::isfinite(pv.resale_factor) && pv.resale_factor >= 0.0 &&
              pv.resale_factor <= 1.0,
          "pv: resale_factor must lie in [0, 1]");
}

void DemandSpec::Validate() const {
  Require(IsFraction(eta_charging), "demand: eta_charging must lie in (0, 1]");
  Require(IsFraction(eta_warehouse),
          "demand: eta_warehouse must lie in (0, 1]");
}

std::string CalendarDate::ToString() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
  return buf;
}

CalendarDate CalendarDate::Parse(const std::string& text) {
  CalendarDate d;
  char tail = 0;
  if (text.size() != 10 || text[4] != '-' || text[7] != '-' ||
      std::sscanf(text.c_str(), "%4d-%2d-%2d%c", &d.year, &d.month, &d.day,
                  &tail) != 3 ||
      !d.IsValid()) {
    throw ValidationError("invalid date '" + text + "'");
  }
  return d;
}

bool CalendarDate::IsValid() const {
  if (month < 1 || month > 12 || day < 1 || day > 31) return false;
  return ToChrono(*this).ok();
}

CalendarDate CalendarDate::NextDay() const {
  const std::chrono::sys_days next =
      std::chrono::sys_days{ToChrono(*this)} + std::chrono::days{1};
  return FromChrono(std::chrono::year_month_day{next});
}

int CalendarDate::Weekday() const {
  return static_cast<int>(
      std::chrono::weekday{std::chrono::sys_days{ToChrono(*this)}}
          .c_encoding());
}

int CalendarDate::DayOfYear() const {
  const std::chrono::sys_days first{std::chrono::year_month_day{
      std::chrono::year{year}, std::chrono::January, std::chrono::day{1}}};
  return static_cast<int>(
             (std::chrono::sys_days{ToChrono(*this)} - first).count()) +
         1;
}

void HistoricalDay::Validate(int steps_per_day) const {
  const std::string where = "day " + date.ToString() + ": ";
  const auto n = static_cast<std::size_t>(steps_per_day);
  Require(price.size() == n && demand_ch.size() == n &&
              demand_wh.size() == n && pv_cf.size() == n,
          where + "every signal must have " + std::to_string(steps_per_day) +
              " entries");
  for (std::size_t k = 0; k < n; ++k) {
    Require(std::isfinite(price[k]), where + "non-finite price");
    Require(std::isfinite(demand_ch[k]) && demand_ch[k] >= 0.0 &&
                std::isfinite(demand_wh[k]) && demand_wh[k] >= 0.0,
            where + "demand must be finite and nonnegative");
    Require(std::isfinite(pv_cf[k]) && pv_cf[k] >= 0.0 && pv_cf[k] <= 1.0,
            where + "capacity factor out of range");
  }
}

Horizon CaseStudyHorizon() {
  Horizon h;
  h.tau_minutes = 60;
  h.synthetic_days = 30;
  h.years = 20;
  h.discount_rate = 0.04;
  return h;
}

SourceSpec CaseStudySources() {
  SourceSpec s;
  s.grid.eta_import = 0.95;
  s.grid.eta_export = 0.95;
  s.grid.power_ceiling = 2.8;
  s.grid.peak_per_mw = 9.03;
  // Placeholders: 1 k€/month connection, 0.5 k€/month transmission and
  // 40 k€/MW/yr contracted capacity.
  s.grid.conn_fixed = 12.0;
  s.grid.tran_fixed = 6.0;
  s.grid.var_per_mw = 40.0;
  s.grid.f_sell = 0.9;
  s.pv.eta = 0.9;
  s.pv.cost_per_mw = 300.0;
  s.pv.om_per_mw_yr = 15.0;
  s.pv.power_ceiling = 5.0;
  s.pv.resale_factor = 0.75;
  return s;
}

}  // namespace hessco
