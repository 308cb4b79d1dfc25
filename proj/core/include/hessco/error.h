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

#ifndef HESSCO_ERROR_H_
#define HESSCO_ERROR_H_

#include <stdexcept>
#include <string>

namespace hessco {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& file, int line, const std::string& what)
      : Error(Format(file, line, what)), file_(file), line_(line) {}

  const std::string& file() const { return file_; }
  int line() const { return line_; }

 private:
  static std::string Format(const std::string& file, int line,
                            const std::string& what) {
    std::string out = file;
    if (line > 0) out += ":" + std::to_string(line);
    if (!out.empty()) out += ": ";
    return out + what;
  }

  std::string file_;
  int line_;
};

// A value violates a documented invariant (efficiency out of (0,1], ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Inconsistent run or model configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// The independent cost recomputation disagrees with the solver objective.
class AuditError : public Error {
 public:
  using Error::Error;
};

}  // namespace hessco

#endif  // HESSCO_ERROR_H_
