// Copyright 2026 The gapcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gapcert {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A requested sieve range exceeds the configured segment budget.
struct BudgetError : Error {
  using Error::Error;
};

// Line-oriented input could not be parsed; line numbers are 1-based.
struct ParseError : Error {
  ParseError(std::size_t line_no, const std::string& what)
      : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
  std::size_t line;
};

// A record list or scan-part list violates its invariants.
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace gapcert
