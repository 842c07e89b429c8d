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

// Command-line front end. Kept in the library so tests can drive it
// in-process.

#ifndef PIRES_CLI_HPP_
#define PIRES_CLI_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pires/syntax.hpp"

namespace pires {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitProperty = 3;
inline constexpr int kExitBudget = 4;

struct RunConfig {
  std::size_t unfold_budget = 2;
  std::size_t cong_budget = 100000;
  std::size_t trace_budget = 10000;
  std::uint64_t seed = 0;
  bool json = false;
};

// Applies "unfold=2,cong=100000,trace=10000" style overrides to cfg.
// Throws pires::Error on malformed text.
void apply_budget_spec(const std::string& spec, RunConfig& cfg);

// A "ctx N; P[; ...]" input split into its header and remaining segments.
struct Query {
  Context ctx;
  std::vector<std::string> segments;
  std::vector<std::pair<std::size_t, std::size_t>> positions;  // line, column
};

// ctx_flag supplies the context when the header is absent.
Query split_query(const std::string& text, std::optional<std::size_t> ctx_flag);

// env_budgets is the value of PIRES_BUDGETS, if set.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err, std::optional<std::string> env_budgets = std::nullopt);

}  // namespace pires

#endif  // PIRES_CLI_HPP_
