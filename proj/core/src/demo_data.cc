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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "hessco/dataset.h"
#include "hessco/error.h"

namespace hessco {
namespace {

// Platform-independent draws on top of mt19937_64 (the std distributions
// are implementation-defined).
class DemoRng {
 public:
  explicit DemoRng(std::uint64_t seed) : engine_(seed) {}

  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double Normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = Uniform();
    while (u1 <= 0.0) u1 = Uniform();
    const double u2 = Uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * std::numbers::pi * u2);
    has_spare_ = true;
    return r * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

double Bump(double h, double center, double width) {
  const double z = (h - center) / width;
  return std::exp(-z * z);
}

}  // namespace

std::vector<HistoricalDay> MakeDemoDataset(std::uint64_t seed, int n_days,
                                           int tau_minutes) {
  if (n_days < 1) throw ValidationError("demo dataset needs n_days >= 1");
  if (tau_minutes <= 0 || 1440 % tau_minutes != 0) {
    throw ValidationError("tau_minutes must divide 1440");
  }
  DemoRng rng(seed);
  const int steps = 1440 / tau_minutes;
  std::vector<HistoricalDay> days;
  days.reserve(static_cast<std::size_t>(n_days));
  CalendarDate date{2021, 1, 1};

  for (int d = 0; d < n_days; ++d, date = date.NextDay()) {
    // +1 at the June solstice, -1 in late December.
    const double season =
        std::cos(2.0 * std::numbers::pi * (date.DayOfYear() - 172) / 365.0);
    const bool weekend = date.Weekday() == 0 || date.Weekday() == 6;
    const double clearness = std::clamp(0.35 + 0.65 * rng.Uniform(), 0.0, 1.0);
    const double day_length = 12.0 + 4.0 * season;
    const double sunrise = 12.0 - 0.5 * day_length;
    const double pv_peak = (0.55 + 0.3 * std::max(season, 0.0)) * clearness;
    const double price_level =
        90.0 - 25.0 * season + 15.0 * rng.Normal();
    const double fleet = weekend ? 0.35 : 1.0 + 0.1 * rng.Normal();

    HistoricalDay day;
    day.date = date;
    for (int k = 0; k < steps; ++k) {
      const double h = (k + 0.5) * tau_minutes / 60.0;

      double cf = 0.0;
      if (h > sunrise && h < sunrise + day_length) {
        cf = pv_peak *
             std::pow(std::sin(std::numbers::pi * (h - sunrise) / day_length),
                      1.5);
        cf *= 1.0 + 0.05 * rng.Normal();
      }
      day.pv_cf.push_back(std::clamp(cf, 0.0, 1.0));

      // Overnight depot charging, an evening arrival surge, a midday
      // opportunity-charging window and a low daytime baseline.
      double ch = 0.4 + 1.3 * (Bump(h, 22.0, 3.0) + Bump(h, -2.0, 3.0) +
                               Bump(h, 26.0, 3.0)) +
                  1.5 * Bump(h, 20.0, 1.0) + 0.6 * Bump(h, 12.5, 1.5);
      ch = std::max(0.0, fleet * ch * (1.0 + 0.08 * rng.Normal()));
      day.demand_ch.push_back(std::min(ch, 3.5));

      const bool open = !weekend && h >= 7.0 && h < 18.0;
      const double wh = (open ? 0.25 : 0.12) * (1.0 + 0.05 * rng.Normal());
      day.demand_wh.push_back(std::max(0.0, wh));

      double price = price_level + 35.0 * Bump(h, 8.0, 1.5) +
                     50.0 * Bump(h, 19.0, 2.0) -
                     30.0 * std::max(season, 0.0) * Bump(h, 13.0, 2.5) -
                     15.0 * Bump(h, 3.5, 1.5) + 6.0 * rng.Normal();
      day.price.push_back(std::max(price, 5.0) * 1e-3);
    }
    days.push_back(std::move(day));
  }
  return days;
}

}  // namespace hessco
