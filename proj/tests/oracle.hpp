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

// Independent reference implementations used by the tests. Nothing here
// calls the library's renaming or enumeration code.

#ifndef PIRES_TESTS_ORACLE_HPP_
#define PIRES_TESTS_ORACLE_HPP_

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "pires/semantics.hpp"
#include "pires/serialize.hpp"

namespace oracle {

using pires::Action;
using pires::ActionKind;
using pires::Context;
using pires::Name;
using pires::Process;
using pires::ProcessKind;
using pires::Rule;
using pires::Transition;

using NameMap = std::function<Name(Name)>;

inline Process rename(const Process& p, const NameMap& f) {
  NameMap under = [&f](Name x) { return x == 0 ? 0 : f(x - 1) + 1; };
  switch (p.kind()) {
    case ProcessKind::kZero:
      return p;
    case ProcessKind::kInput:
      return Process::input(f(p.channel()), rename(p.body(), under));
    case ProcessKind::kOutput:
      return Process::output(f(p.channel()), f(p.payload()), rename(p.body(), f));
    case ProcessKind::kChoice:
      return Process::choice(rename(p.left(), f), rename(p.right(), f));
    case ProcessKind::kPar:
      return Process::par(rename(p.left(), f), rename(p.right(), f));
    case ProcessKind::kRestrict:
      return Process::restrict(rename(p.body(), under));
    case ProcessKind::kReplicate:
      return Process::replicate(rename(p.body(), f));
  }
  return p;
}

inline Name push(Name x) { return x + 1; }
inline NameMap pop(Name y) {
  return [y](Name x) { return x == 0 ? y : x - 1; };
}
inline Name swap(Name x) { return x == 0 ? 1 : x == 1 ? 0 : x; }

inline bool bound(const Action& a) {
  return a.kind == ActionKind::kInput || a.kind == ActionKind::kBoundOutput;
}

// Names of a with one subtracted, if none of them is 0.
inline bool below_binder(const Action& a, Action* out) {
  switch (a.kind) {
    case ActionKind::kTau:
      *out = a;
      return true;
    case ActionKind::kOutput:
      if (a.channel == 0 || a.payload == 0) return false;
      *out = Action::output(a.channel - 1, a.payload - 1);
      return true;
    default:
      if (a.channel == 0) return false;
      *out = a;
      out->channel = a.channel - 1;
      return true;
  }
}

inline Transition node(Rule r, Context ctx, Action a, Process s, Process t,
                       std::vector<Transition> prem, Name y = 0) {
  return Transition::assemble({r, ctx, a, std::move(s), std::move(t), y, std::move(prem)});
}

// Every derivation tree with source p, built bottom-up: for each rule
// whose conclusion can have p as source, all combinations of premise
// derivations are formed and those violating the rule's side condition
// are discarded.
inline std::vector<Transition> derivations(Context ctx, const Process& p, std::size_t budget) {
  std::vector<Transition> out;
  switch (p.kind()) {
    case ProcessKind::kZero:
      break;
    case ProcessKind::kInput:
      out.push_back(node(Rule::kInput, ctx, Action::input(p.channel()), p, p.body(), {}));
      break;
    case ProcessKind::kOutput:
      out.push_back(
          node(Rule::kOutput, ctx, Action::output(p.channel(), p.payload()), p, p.body(), {}));
      break;
    case ProcessKind::kChoice:
      for (const auto& e : derivations(ctx, p.left(), budget))
        out.push_back(node(Rule::kChoiceL, ctx, e.action(), p, e.target(), {e}));
      for (const auto& f : derivations(ctx, p.right(), budget))
        out.push_back(node(Rule::kChoiceR, ctx, f.action(), p, f.target(), {f}));
      break;
    case ProcessKind::kPar: {
      auto ls = derivations(ctx, p.left(), budget);
      auto rs = derivations(ctx, p.right(), budget);
      for (const auto& e : ls) {
        Process q = bound(e.action()) ? rename(p.right(), push) : p.right();
        out.push_back(node(Rule::kParL, ctx, e.action(), p, Process::par(e.target(), q), {e}));
      }
      for (const auto& f : rs) {
        Process q = bound(f.action()) ? rename(p.left(), push) : p.left();
        out.push_back(node(Rule::kParR, ctx, f.action(), p, Process::par(q, f.target()), {f}));
      }
      for (Rule r : {Rule::kParLTau, Rule::kParRTau, Rule::kParLNu, Rule::kParRNu})
        for (const auto& e : ls)
          for (const auto& f : rs) {
            const Action& a = e.action();
            const Action& b = f.action();
            if (a.kind == ActionKind::kTau || b.kind == ActionKind::kTau) continue;
            if (a.channel != b.channel) continue;
            if (r == Rule::kParLTau && a.kind == ActionKind::kInput &&
                b.kind == ActionKind::kOutput)
              out.push_back(node(r, ctx, Action::tau(), p,
                                 Process::par(rename(e.target(), pop(b.payload)), f.target()),
                                 {e, f}, b.payload));
            if (r == Rule::kParRTau && a.kind == ActionKind::kOutput &&
                b.kind == ActionKind::kInput)
              out.push_back(node(r, ctx, Action::tau(), p,
                                 Process::par(e.target(), rename(f.target(), pop(a.payload))),
                                 {e, f}, a.payload));
            if (r == Rule::kParLNu && a.kind == ActionKind::kInput &&
                b.kind == ActionKind::kBoundOutput)
              out.push_back(node(r, ctx, Action::tau(), p,
                                 Process::restrict(Process::par(e.target(), f.target())), {e, f}));
            if (r == Rule::kParRNu && a.kind == ActionKind::kBoundOutput &&
                b.kind == ActionKind::kInput)
              out.push_back(node(r, ctx, Action::tau(), p,
                                 Process::restrict(Process::par(e.target(), f.target())), {e, f}));
          }
      break;
    }
    case ProcessKind::kRestrict:
      for (const auto& e : derivations(ctx.extend(), p.body(), budget)) {
        const Action& a = e.action();
        if (a.kind == ActionKind::kOutput && a.channel >= 1 && a.payload == 0)
          out.push_back(node(Rule::kRestrictOutput, ctx, Action::bound_output(a.channel - 1), p,
                             e.target(), {e}));
        Action c;
        if (below_binder(a, &c)) {
          Process t = bound(c) ? rename(e.target(), swap) : e.target();
          out.push_back(node(Rule::kRestrictA, ctx, c, p, Process::restrict(t), {e}));
        }
      }
      break;
    case ProcessKind::kReplicate:
      if (budget == 0) break;
      for (const auto& e : derivations(ctx, Process::par(p.body(), p), budget - 1))
        out.push_back(node(Rule::kRep, ctx, e.action(), p, e.target(), {e}));
      break;
  }
  return out;
}

inline std::vector<std::string> canonical(const std::vector<Transition>& ts) {
  std::vector<std::string> keys;
  for (const auto& t : ts) keys.push_back(pires::to_json(t).dump());
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace oracle

#endif  // PIRES_TESTS_ORACLE_HPP_
