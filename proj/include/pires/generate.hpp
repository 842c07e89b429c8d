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

// Seeded and exhaustive generation of well-scoped processes.

#ifndef PIRES_GENERATE_HPP_
#define PIRES_GENERATE_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "pires/congruence.hpp"
#include "pires/renaming.hpp"
#include "pires/syntax.hpp"
#include "pires/trace.hpp"

namespace pires {

// mt19937_64 with a fixed reduction, so streams are identical across
// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform-ish draw in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// A process closed by ctx with size() <= max_size (max_size >= 1). Every
// constructor that fits the remaining size is equally likely; prefixes
// are only drawn when a name is in scope.
Process random_process(Rng& rng, Context ctx, std::size_t max_size);

// Every process closed by ctx with size() <= max_size, smallest first.
std::vector<Process> all_processes(Context ctx, std::size_t max_size);

// An arbitrary function from dom to cod (cod must be non-empty unless
// dom is).
Renaming random_renaming(Rng& rng, Context dom, Context cod);

// A random braiding congruence with source p. Every nu-nu site is
// independently left alone, swapped by either swap rule, or swapped after
// its body was rewritten.
CongProof random_cong(Rng& rng, Context ctx, const Process& p);

// A random walk of at most max_length steps from p; stops early at a
// process without transitions.
Trace random_trace(Rng& rng, Context ctx, const Process& p, std::size_t max_length,
                   std::size_t unfold_budget = 2);

}  // namespace pires

#endif  // PIRES_GENERATE_HPP_
