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

#ifndef HESSCO_TYPES_H_
#define HESSCO_TYPES_H_

#include <compare>
#include <string>
#include <vector>

// Units used throughout the library: power in MW, energy in MWh, money in
// k€ (so prices are k€/MWh and specific costs k€/MW or k€/MWh).

namespace hessco {

// Time discretisation and economic horizon of one optimisation run.
struct Horizon {
  int tau_minutes = 60;
  // Number of days in the synthetic optimisation period.
  int synthetic_days = 30;
  int years = 20;
  double discount_rate = 0.04;

  int StepsPerDay() const { return 1440 / tau_minutes; }
  int Steps() const { return synthetic_days * StepsPerDay(); }
  double TauHours() const { return tau_minutes / 60.0; }
  // Factor scaling the synthetic period to one year.
  double AnnualizationFactor() const { return 365.0 / synthetic_days; }

  // Throws ValidationError.
  void Validate() const;
};

// One storage technology.
struct EssSpec {
  std::string name;
  double eta_charge = 1.0;
  double eta_discharge = 1.0;
  double cost_energy = 0.0;  // k€/MWh installed
  double cost_power = 0.0;   // k€/MW installed
  double om_energy = 0.0;    // k€/MWh of throughput
  double om_power = 0.0;     // k€/MW/yr
  double energy_ceiling = 0.0;  // MWh
  double power_ceiling = 0.0;   // MW
  double crate_ceiling = 0.0;   // per step
  double dod_min_fraction = 0.0;
  double cycle_life = 1.0;
  double resale_factor = 0.0;

  void Validate() const;
};

struct GridSpec {
  double eta_import = 0.95;  // grid -> bus
  double eta_export = 0.95;  // bus -> grid
  double power_ceiling = 2.8;
  double conn_fixed = 0.0;   // k€/yr
  double tran_fixed = 0.0;   // k€/yr
  double var_per_mw = 0.0;   // k€/MW/yr of contracted capacity
  double peak_per_mw = 0.0;  // k€/MW/yr of peak import
  double f_sell = 1.0;
};

struct PvSpec {
  double eta = 0.9;
  double cost_per_mw = 0.0;
  double om_per_mw_yr = 0.0;
  double power_ceiling = 5.0;
  double resale_factor = 0.0;
};

struct SourceSpec {
  GridSpec grid;
  PvSpec pv;

  void Validate() const;
};

// Conversion efficiency from the DC bus to each demand category.
struct DemandSpec {
  double eta_charging = 1.0;
  double eta_warehouse = 1.0;

  void Validate() const;
};

struct CalendarDate {
  int year = 1970;
  int month = 1;
  int day = 1;

  auto operator<=>(const CalendarDate&) const = default;

  // ISO-8601 "YYYY-MM-DD".
  std::string ToString() const;
  // Throws ValidationError on malformed or impossible dates.
  static CalendarDate Parse(const std::string& text);
  CalendarDate NextDay() const;
  // 0 = Sunday ... 6 = Saturday.
  int Weekday() const;
  int DayOfYear() const;
  bool IsValid() const;
};

struct HistoricalDay {
  CalendarDate date;
  std::vector<double> price;      // k€/MWh per step
  std::vector<double> demand_ch;  // MW, truck charging
  std::vector<double> demand_wh;  // MW, warehouse
  std::vector<double> pv_cf;      // fraction of installed PV power

  void Validate(int steps_per_day) const;
};

// Case-study defaults (τ = 60 min, Y = 20, r = 0.04, T = 30 days).
Horizon CaseStudyHorizon();
// Case-study grid and PV parameters. Connection charges not given
// with the case study are set to documented placeholder values.
SourceSpec CaseStudySources();

}  // namespace hessco

#endif  // HESSCO_TYPES_H_
