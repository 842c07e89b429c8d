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

// Concurrency of coinitial transitions, residuation, cofinality and the
// cube property.

#ifndef PIRES_CONCURRENCY_HPP_
#define PIRES_CONCURRENCY_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pires/congruence.hpp"
#include "pires/semantics.hpp"

namespace pires {

enum class ConcurRule : std::uint8_t {
  kParOpposite,  // one side each: parL with parR, or the mirror
  kParLeft,      // both act on the left component, at most one also right
  kParRight,
  kParBoth,      // two rendezvous
  kChoice,
  kRestrict,
  kRep
};

const char* concur_rule_name(ConcurRule r);

class ConcurProof {
 public:
  // Checked: infers the rule from the pair and verifies that the
  // children relate the right sub-derivations.
  static ConcurProof make(const Transition& e, const Transition& f,
                          std::vector<ConcurProof> children);
  static ConcurProof assemble(ConcurRule rule, Transition e, Transition f,
                              std::vector<ConcurProof> children);

  ConcurRule rule() const { return node_->rule; }
  const Transition& left() const { return node_->left; }
  const Transition& right() const { return node_->right; }
  const std::vector<ConcurProof>& children() const { return node_->children; }
  const ConcurProof& child(std::size_t i = 0) const {
    return node_->children.at(i);
  }

  friend bool operator==(const ConcurProof& a, const ConcurProof& b);

 private:
  struct Node {
    ConcurRule rule;
    Transition left;
    Transition right;
    std::vector<ConcurProof> children;
  };
  explicit ConcurProof(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

Report validate_concur(const ConcurProof& chi);
// The same proof read right to left.
ConcurProof flip(const ConcurProof& chi);

// Throws NotCoinitial unless e and f share context and source.
std::optional<ConcurProof> decide_concurrent(const Transition& e,
                                             const Transition& f);

// E/E' for chi : E ~ E'. Throws ProofMismatch if chi does not relate them.
Transition residual_transition(const Transition& e, const Transition& f,
                               const ConcurProof& chi);
Transition residual(const ConcurProof& chi);

int delta(const Transition& e, const Transition& f, const ConcurProof& chi);

struct DiamondReport {
  Transition e;
  Transition f;
  ConcurProof chi;
  Transition e_after_f;  // E/E'
  Transition f_after_e;  // E'/E
  int delta = 0;
  SearchStatus status = SearchStatus::kNotFound;
  std::size_t explored = 0;
  // Relates the target of (E then E'/E) to that of (E' then E/E').
  std::optional<Braiding> braiding;
};

DiamondReport cofinality_witness(const Transition& e, const Transition& f,
                                 const ConcurProof& chi,
                                 std::size_t cong_budget);
Report verify_pentagon(const DiamondReport& d);

ConcurProof residual_concur_after_renaming(const ConcurProof& chi,
                                           const Renaming& rho);

// From chi : E ~ E', chi_a : E ~ E'' and chi_b : E' ~ E'', a proof of
// E/E'' ~ E'/E''.
ConcurProof residual_concur_after_transition(const ConcurProof& chi,
                                             const Transition& e2,
                                             const ConcurProof& chi_a,
                                             const ConcurProof& chi_b);

struct CubeReport {
  bool equal = false;
  SearchStatus status = SearchStatus::kNotFound;
  std::optional<Transition> lhs;  // ((E'/E'')/(E/E'')) moved along gamma(E'', E)
  std::optional<Transition> rhs;  // (E'/E)/(E''/E)
};

// chi01 : E ~ E', chi12 : E' ~ E'', chi20 : E'' ~ E.
CubeReport check_cube(const ConcurProof& chi01, const ConcurProof& chi12,
                      const ConcurProof& chi20, std::size_t cong_budget);

std::string format_concur(const ConcurProof& chi);

}  // namespace pires

#endif  // PIRES_CONCURRENCY_HPP_
