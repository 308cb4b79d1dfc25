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

#ifndef HESSCO_MPS_H_
#define HESSCO_MPS_H_

#include <iosfwd>
#include <string>

#include "hessco/lp_model.h"

namespace hessco {

// Free-format MPS. The objective row is named OBJ and its constant is
// written as the negated RHS of OBJ. Numbers use the shortest decimal
// form that reads back to the same double.
void WriteMps(const ModelInstance& model, std::ostream& out);
// Throws Error when the file cannot be written.
void ExportMps(const ModelInstance& model, const std::string& path);

// Reads what WriteMps produces (and the common free-format subset:
// N/L/G/E rows, RHS, UP/LO/FX/FR/MI/PL bounds). RANGES entries and integer
// markers are rejected. Throws ParseError with the line number.
ModelInstance ReadMps(std::istream& in, const std::string& source = "<mps>");
ModelInstance ReadMpsFile(const std::string& path);

}  // namespace hessco

#endif  // HESSCO_MPS_H_
