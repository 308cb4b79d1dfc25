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

#ifndef HESSCO_CATALOG_H_
#define HESSCO_CATALOG_H_

#include <string>
#include <vector>

#include "hessco/types.h"

namespace hessco {

// Storage technologies in file order.
class Catalog {
 public:
  Catalog() = default;
  explicit Catalog(std::vector<EssSpec> entries);

  const std::vector<EssSpec>& entries() const { return entries_; }
  // nullptr when absent.
  const EssSpec* Find(const std::string& name) const;
  // Throws ConfigError when absent.
  const EssSpec& At(const std::string& name) const;
  // Entries named in `names`, in catalog order. Throws ConfigError on an
  // unknown or repeated name.
  std::vector<EssSpec> Subset(const std::vector<std::string>& names) const;

 private:
  std::vector<EssSpec> entries_;
};

// Reads a catalog of flat key/value records:
//
//   # comment
//   [B]
//   eta_c = 0.83
//   cost_energy = 900 kEUR/MWh
//   ...
//
// Each record needs eta_c, eta_d, cost_energy, cost_power, om_energy,
// om_power, e_cap_max, p_cap_max, c_rate_max, dod_min, cycle_life and
// resale_factor. A value may carry a unit that is converted to internal
// units (kWh, kW, EUR/kWh, EUR/kW, EUR/kW/yr, %). Throws ParseError naming
// the record and field.
Catalog LoadCatalog(const std::string& path);
Catalog ParseCatalog(const std::string& text, const std::string& source);

// Case-study battery (B), supercapacitor (S) and flywheel (F).
Catalog CaseStudyCatalog();

}  // namespace hessco

#endif  // HESSCO_CATALOG_H_
