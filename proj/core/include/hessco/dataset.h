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

#ifndef HESSCO_DATASET_H_
#define HESSCO_DATASET_H_

#include <cstdint>
#include <string>
#include <vector>

#include "hessco/types.h"

namespace hessco {

// Historical days plus the non-fatal findings of loading them.
struct Dataset {
  std::vector<HistoricalDay> days;
  std::vector<std::string> warnings;
};

// Paths of the three signal files.
//
// Layout, one row per step with ISO-8601 timestamps (YYYY-MM-DDTHH:MM, an
// optional :00 seconds field and a trailing Z are accepted):
//   prices  timestamp,price[EUR/MWh]            (or price[kEUR/MWh])
//   demand  timestamp,charging[MW],warehouse[MW] (kW also accepted)
//   pv      timestamp,pv[cf]
struct DatasetFiles {
  std::string prices;
  std::string demand;
  std::string pv;
};

// Loads the three files and groups them into complete days at the horizon's
// resolution. Incomplete days at either end are dropped with a warning; an
// incomplete day in the interior is an error. Throws ParseError.
Dataset LoadDataset(const DatasetFiles& files, int tau_minutes);

// Writes `days` in the layout read by LoadDataset, using internal units so
// that a reload reproduces every value bit for bit.
void WriteDataset(const std::vector<HistoricalDay>& days,
                  const DatasetFiles& files, int tau_minutes);

// Deterministic synthetic history starting 2021-01-01: diurnal PV bell with
// seasonal amplitude, weekday/weekend truck-charging and warehouse demand,
// and prices with morning and evening peaks.
std::vector<HistoricalDay> MakeDemoDataset(std::uint64_t seed, int n_days,
                                           int tau_minutes = 60);

// Stable 64-bit content hash of a list of days (FNV-1a over dates and the
// bit patterns of every value).
std::uint64_t HashDays(const std::vector<HistoricalDay>& days);

}  // namespace hessco

#endif  // HESSCO_DATASET_H_
