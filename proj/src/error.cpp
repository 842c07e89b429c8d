// Copyright 2026 The pires Authors
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

#include "pires/error.hpp"

#include <sstream>

namespace pires {

ParseError::ParseError(std::size_t line, std::size_t column,
                       const std::string& expected, const std::string& found)
    : Error("parse error at " + std::to_string(line) + ":" +
            std::to_string(column) + ": expected " + expected + ", found " +
            found),
      line_(line),
      column_(column),
      expected_(expected) {}

std::string Report::to_string() const {
  if (ok) return "ok";
  std::ostringstream os;
  os << message;
  if (offending) os << " (name " << *offending << ")";
  if (!path.empty()) os << " at " << path;
  return os.str();
}

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound:
      return "found";
    case SearchStatus::kNotFound:
      return "not-found";
    case SearchStatus::kBudgetExceeded:
      return "budget-exceeded";
  }
  return "?";
}

}  // namespace pires
