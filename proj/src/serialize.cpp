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

#include "pires/serialize.hpp"

#include <string>

namespace pires {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(std::string("json: missing field '") + key + "'");
  return j.at(key);
}

std::size_t nat(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw Error(std::string("json: field '") + key + "' is not a natural number");
  return v.get<std::size_t>();
}

std::string str(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw Error(std::string("json: field '") + key + "' is not a string");
  return v.get<std::string>();
}

}  // namespace

Json to_json(const Process& p) {
  switch (p.kind()) {
    case ProcessKind::kZero:
      return {{"t", "zero"}};
    case ProcessKind::kInput:
      return {{"t", "in"}, {"x", p.channel()}, {"p", to_json(p.body())}};
    case ProcessKind::kOutput:
      return {{"t", "out"}, {"x", p.channel()}, {"y", p.payload()}, {"p", to_json(p.body())}};
    case ProcessKind::kChoice:
      return {{"t", "choice"}, {"l", to_json(p.left())}, {"r", to_json(p.right())}};
    case ProcessKind::kPar:
      return {{"t", "par"}, {"l", to_json(p.left())}, {"r", to_json(p.right())}};
    case ProcessKind::kRestrict:
      return {{"t", "new"}, {"p", to_json(p.body())}};
    case ProcessKind::kReplicate:
      return {{"t", "bang"}, {"p", to_json(p.body())}};
  }
  return nullptr;
}

Process process_from_json(const Json& j) {
  std::string t = str(j, "t");
  if (t == "zero") return Process::zero();
  if (t == "in") return Process::input(nat(j, "x"), process_from_json(field(j, "p")));
  if (t == "out")
    return Process::output(nat(j, "x"), nat(j, "y"), process_from_json(field(j, "p")));
  if (t == "choice")
    return Process::choice(process_from_json(field(j, "l")), process_from_json(field(j, "r")));
  if (t == "par")
    return Process::par(process_from_json(field(j, "l")), process_from_json(field(j, "r")));
  if (t == "new") return Process::restrict(process_from_json(field(j, "p")));
  if (t == "bang") return Process::replicate(process_from_json(field(j, "p")));
  throw Error("json: unknown process tag '" + t + "'");
}

Json to_json(const Action& a) {
  switch (a.kind) {
    case ActionKind::kInput:
      return {{"k", "in"}, {"x", a.channel}};
    case ActionKind::kOutput:
      return {{"k", "out"}, {"x", a.channel}, {"y", a.payload}};
    case ActionKind::kBoundOutput:
      return {{"k", "bout"}, {"x", a.channel}};
    case ActionKind::kTau:
      return {{"k", "tau"}};
  }
  return nullptr;
}

Action action_from_json(const Json& j) {
  std::string k = str(j, "k");
  if (k == "in") return Action::input(nat(j, "x"));
  if (k == "out") return Action::output(nat(j, "x"), nat(j, "y"));
  if (k == "bout") return Action::bound_output(nat(j, "x"));
  if (k == "tau") return Action::tau();
  throw Error("json: unknown action kind '" + k + "'");
}

Json to_json(const Renaming& r) {
  Json j = {{"dom", r.dom().size}, {"cod", r.cod().size}, {"map", r.map()}};
  if (!r.tag().empty()) j["tag"] = r.tag();
  return j;
}

Renaming renaming_from_json(const Json& j) {
  const Json& m = field(j, "map");
  if (!m.is_array()) throw Error("json: renaming map is not an array");
  std::vector<Name> map;
  for (const Json& v : m) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
      throw Error("json: renaming entry is not a natural number");
    map.push_back(v.get<Name>());
  }
  std::string tag = j.contains("tag") ? str(j, "tag") : "";
  return Renaming::from_map(Context{nat(j, "dom")}, Context{nat(j, "cod")}, std::move(map), tag);
}

Json to_json(const Transition& e) {
  Json j = {{"rule", rule_name(e.rule())},
            {"ctx", e.ctx().size},
            {"source", to_json(e.source())},
            {"action", to_json(e.action())},
            {"target", to_json(e.target())}};
  if (e.rule() == Rule::kParLTau || e.rule() == Rule::kParRTau) j["y"] = e.y();
  if (!e.premises().empty()) {
    Json ps = Json::array();
    for (const auto& p : e.premises()) ps.push_back(to_json(p));
    j["premises"] = ps;
  }
  return j;
}

Transition transition_from_json(const Json& j) {
  Transition::Parts t;
  std::string r = str(j, "rule");
  if (!rule_from_name(r, &t.rule)) throw Error("json: unknown rule '" + r + "'");
  t.ctx = Context{nat(j, "ctx")};
  t.source = process_from_json(field(j, "source"));
  t.action = action_from_json(field(j, "action"));
  t.target = process_from_json(field(j, "target"));
  if (j.contains("y")) t.y = nat(j, "y");
  if (j.contains("premises")) {
    const Json& ps = field(j, "premises");
    if (!ps.is_array()) throw Error("json: premises is not an array");
    for (const Json& p : ps) t.premises.push_back(transition_from_json(p));
  }
  return Transition::assemble(std::move(t));
}

Json to_json(const CongProof& phi) {
  Json j = {{"rule", cong_rule_name(phi.rule())},
            {"ctx", phi.ctx().size},
            {"source", to_json(phi.source())},
            {"target", to_json(phi.target())}};
  switch (phi.rule()) {
    case CongRule::kNuNuSwap:
    case CongRule::kNuNuSwapInv:
      j["payload"] = to_json(phi.payload());
      break;
    case CongRule::kInput:
      j["x"] = phi.x();
      break;
    case CongRule::kOutput:
      j["x"] = phi.x();
      j["y"] = phi.y();
      break;
    default:
      break;
  }
  if (!phi.children().empty()) {
    Json cs = Json::array();
    for (const auto& c : phi.children()) cs.push_back(to_json(c));
    j["children"] = cs;
  }
  return j;
}

CongProof cong_from_json(const Json& j) {
  CongProof::Parts t;
  std::string r = str(j, "rule");
  if (!cong_rule_from_name(r, &t.rule)) throw Error("json: unknown congruence rule '" + r + "'");
  t.ctx = Context{nat(j, "ctx")};
  t.source = process_from_json(field(j, "source"));
  t.target = process_from_json(field(j, "target"));
  if (j.contains("payload")) t.payload = process_from_json(field(j, "payload"));
  if (j.contains("x")) t.x = nat(j, "x");
  if (j.contains("y")) t.y = nat(j, "y");
  if (j.contains("children"))
    for (const Json& c : field(j, "children")) t.children.push_back(cong_from_json(c));
  return CongProof::assemble(std::move(t));
}

Json to_json(const Braiding& g) {
  return {{"ctx", g.ctx.size},
          {"source", to_json(g.source)},
          {"delta", g.delta},
          {"shift", g.shift},
          {"base", to_json(g.base())},
          {"phi", to_json(g.phi)},
          {"target", to_json(g.target())}};
}

Braiding braiding_from_json(const Json& j) {
  Braiding g{Context{nat(j, "ctx")}, process_from_json(field(j, "source")),
             static_cast<int>(nat(j, "delta")), nat(j, "shift"),
             cong_from_json(field(j, "phi"))};
  if (g.delta > 2) throw Error("json: braiding delta out of range");
  return g;
}

Json to_json(const ConcurProof& chi) {
  Json j = {{"rule", concur_rule_name(chi.rule())},
            {"left", to_json(chi.left())},
            {"right", to_json(chi.right())}};
  if (!chi.children().empty()) {
    Json cs = Json::array();
    for (const auto& c : chi.children()) cs.push_back(to_json(c));
    j["children"] = cs;
  }
  return j;
}

ConcurProof concur_from_json(const Json& j) {
  std::string r = str(j, "rule");
  int found = -1;
  for (int i = 0; i <= static_cast<int>(ConcurRule::kRep); ++i)
    if (r == concur_rule_name(static_cast<ConcurRule>(i))) found = i;
  if (found < 0) throw Error("json: unknown concurrency rule '" + r + "'");
  std::vector<ConcurProof> kids;
  if (j.contains("children"))
    for (const Json& c : field(j, "children")) kids.push_back(concur_from_json(c));
  return ConcurProof::assemble(static_cast<ConcurRule>(found),
                               transition_from_json(field(j, "left")),
                               transition_from_json(field(j, "right")), std::move(kids));
}

Json to_json(const DiamondReport& d) {
  Json j = {{"e", to_json(d.e)},
            {"f", to_json(d.f)},
            {"chi", to_json(d.chi)},
            {"e_after_f", to_json(d.e_after_f)},
            {"f_after_e", to_json(d.f_after_e)},
            {"delta", d.delta},
            {"braid", d.delta == 2 ? "swap" : "id"},
            {"status", to_string(d.status)},
            {"explored", d.explored}};
  j["braiding"] = d.braiding ? to_json(*d.braiding) : Json(nullptr);
  return j;
}

Json to_json(const Trace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps()) steps.push_back(to_json(s));
  return {{"ctx", t.ctx().size}, {"source", to_json(t.source())}, {"steps", steps}};
}

Trace trace_from_json(const Json& j) {
  std::vector<Transition> steps;
  const Json& s = field(j, "steps");
  if (!s.is_array()) throw Error("json: steps is not an array");
  for (const Json& e : s) steps.push_back(transition_from_json(e));
  return Trace(Context{nat(j, "ctx")}, process_from_json(field(j, "source")), std::move(steps));
}

Json to_json(const CausalEquivProof& a) {
  switch (a.rule()) {
    case EquivRule::kNil:
      return {{"rule", "nil"}, {"ctx", a.ctx().size}, {"process", to_json(a.process())}};
    case EquivRule::kCons:
      return {{"rule", "cons"}, {"step", to_json(a.step())}, {"rest", to_json(a.sub())}};
    case EquivRule::kTrans:
      return {{"rule", "trans"}, {"first", to_json(a.sub(0))}, {"second", to_json(a.sub(1))}};
    case EquivRule::kTranspose:
      return {{"rule", "transpose"},
              {"e", to_json(a.step())},
              {"f", to_json(a.other())},
              {"chi", a.chi() ? to_json(*a.chi()) : Json(nullptr)},
              {"rest", to_json(a.sub())}};
  }
  return nullptr;
}

CausalEquivProof equiv_from_json(const Json& j) {
  std::string r = str(j, "rule");
  if (r == "nil") return CausalEquivProof::nil(Context{nat(j, "ctx")}, process_from_json(field(j, "process")));
  if (r == "cons")
    return CausalEquivProof::cons(transition_from_json(field(j, "step")), equiv_from_json(field(j, "rest")));
  if (r == "trans")
    return CausalEquivProof::trans(equiv_from_json(field(j, "first")), equiv_from_json(field(j, "second")));
  if (r == "transpose") {
    std::optional<ConcurProof> chi;
    if (!field(j, "chi").is_null()) chi = concur_from_json(field(j, "chi"));
    return CausalEquivProof::transpose(transition_from_json(field(j, "e")),
                                       transition_from_json(field(j, "f")), chi,
                                       equiv_from_json(field(j, "rest")));
  }
  throw Error("json: unknown equivalence rule '" + r + "'");
}

}  // namespace pires
