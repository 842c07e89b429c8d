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

// JSON encodings. Decoders throw pires::Error on malformed input and do
// not validate derivations; run the validate_* checks on the result.

#ifndef PIRES_SERIALIZE_HPP_
#define PIRES_SERIALIZE_HPP_

#include "json.hpp"
#include "pires/concurrency.hpp"
#include "pires/congruence.hpp"
#include "pires/renaming.hpp"
#include "pires/semantics.hpp"
#include "pires/syntax.hpp"
#include "pires/trace.hpp"

namespace pires {

using Json = nlohmann::json;

Json to_json(const Process& p);
Json to_json(const Action& a);
Json to_json(const Renaming& r);
Json to_json(const Transition& e);
Json to_json(const CongProof& phi);
Json to_json(const Braiding& g);
Json to_json(const ConcurProof& chi);
Json to_json(const DiamondReport& d);
Json to_json(const Trace& t);
Json to_json(const CausalEquivProof& alpha);

Process process_from_json(const Json& j);
Action action_from_json(const Json& j);
Renaming renaming_from_json(const Json& j);
Transition transition_from_json(const Json& j);
CongProof cong_from_json(const Json& j);
Braiding braiding_from_json(const Json& j);
ConcurProof concur_from_json(const Json& j);
Trace trace_from_json(const Json& j);
CausalEquivProof equiv_from_json(const Json& j);

}  // namespace pires

#endif  // PIRES_SERIALIZE_HPP_
