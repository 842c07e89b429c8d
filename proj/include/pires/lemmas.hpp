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

// Extensional checks of the renaming equational theory.

#ifndef PIRES_LEMMAS_HPP_
#define PIRES_LEMMAS_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace pires {

struct LemmaResult {
  std::string name;  // "L1" .. "L8"
  std::string statement;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

struct LemmaConfig {
  std::size_t max_ctx = 6;
  std::size_t random_samples = 1000;
  std::uint64_t seed = 0;
};

// L1-L5 exhaustive over contexts up to max_ctx, L6-L8 over random renamings.
std::vector<LemmaResult> run_lemma_suite(const LemmaConfig& cfg = {});

}  // namespace pires

#endif  // PIRES_LEMMAS_HPP_
