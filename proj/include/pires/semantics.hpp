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

// Labelled transitions as derivation trees.

#ifndef PIRES_SEMANTICS_HPP_
#define PIRES_SEMANTICS_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pires/renaming.hpp"
#include "pires/syntax.hpp"

namespace pires {

enum class Rule : std::uint8_t {
  kInput,
  kOutput,
  kChoiceL,
  kChoiceR,
  kParL,
  kParR,
  kParLTau,  // receiver on the left
  kParRTau,  // receiver on the right
  kParLNu,   // receiver on the left, extruding sender on the right
  kParRNu,
  kRestrictOutput,
  kRestrictA,
  kRep
};

// Stable lower-camel names, as used in JSON.
const char* rule_name(Rule r);
bool rule_from_name(const std::string& s, Rule* out);

bool is_rendezvous(Rule r);

class Transition {
 public:
  struct Parts {
    Rule rule = Rule::kInput;
    Context ctx;
    Action action;
    Process source;
    Process target;
    Name y = 0;  // payload of a tau rendezvous
    std::vector<Transition> premises;
  };

  // Prefix axiom for an input or output prefix.
  static Transition prefix(Context ctx, const Process& p);
  static Transition choice_l(const Transition& e, const Process& q);
  static Transition choice_r(const Process& p, const Transition& f);
  static Transition par_l(const Transition& e, const Process& q);
  static Transition par_r(const Process& p, const Transition& f);
  static Transition par_l_tau(const Transition& e, const Transition& f);
  static Transition par_r_tau(const Transition& e, const Transition& f);
  static Transition par_l_nu(const Transition& e, const Transition& f);
  static Transition par_r_nu(const Transition& e, const Transition& f);
  // Picks the rendezvous rule from the two premise actions.
  static Transition rendezvous(const Transition& e, const Transition& f);
  static Transition restrict_output(const Transition& e);
  // The conclusion's action is the premise's action with push undone.
  static Transition restrict_a(const Transition& e);
  // restrict_output when the premise action is out (x+1) 0, else restrict_a.
  static Transition restrict(const Transition& e);
  static Transition rep(const Transition& e);

  // No side-condition checks; see validate_transition.
  static Transition assemble(Parts parts);

  Rule rule() const { return node_->parts.rule; }
  Context ctx() const { return node_->parts.ctx; }
  const Action& action() const { return node_->parts.action; }
  const Process& source() const { return node_->parts.source; }
  const Process& target() const { return node_->parts.target; }
  Context target_ctx() const { return action_target(ctx(), action()); }
  Name y() const { return node_->parts.y; }
  const std::vector<Transition>& premises() const {
    return node_->parts.premises;
  }
  const Transition& premise(std::size_t i = 0) const {
    return node_->parts.premises.at(i);
  }
  std::size_t hash() const { return node_->hash; }
  const Parts& parts() const { return node_->parts; }

  friend bool operator==(const Transition& a, const Transition& b);
  friend bool operator!=(const Transition& a, const Transition& b) {
    return !(a == b);
  }

 private:
  struct Node {
    Parts parts;
    std::size_t hash = 0;
  };
  explicit Transition(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Transition checked(Parts parts);
  std::shared_ptr<const Node> node_;
};

// Checks every node of the derivation, including cached fields.
Report validate_transition(const Transition& e);

// All derivations from p with at most `unfold_budget` Rep nodes on any
// root-to-leaf path. Throws ScopeError if p is not closed by ctx.
std::vector<Transition> enumerate_transitions(Context ctx, const Process& p,
                                              std::size_t unfold_budget);

// E/rho. Throws SizeMismatch unless dom(rho) = ctx(E).
Transition rename_transition(const Transition& e, const Renaming& rho);

// Maximum number of Rep nodes on a root-to-leaf path.
std::size_t rep_depth(const Transition& e);

// Compact expression-like rendering of a derivation.
std::string format_derivation(const Transition& e);

// Undo push on an action; false if the action mentions index 0.
bool unpush(const Action& a, Action* out);

}  // namespace pires

template <>
struct std::hash<pires::Transition> {
  std::size_t operator()(const pires::Transition& e) const { return e.hash(); }
};

#endif  // PIRES_SEMANTICS_HPP_
