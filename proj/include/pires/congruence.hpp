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

// The braiding congruence generated by nu nu P ~ nu nu (swap P), and
// braidings: a base renaming (identity or a shifted swap) followed by a
// congruence proof.

#ifndef PIRES_CONGRUENCE_HPP_
#define PIRES_CONGRUENCE_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "pires/renaming.hpp"
#include "pires/semantics.hpp"
#include "pires/syntax.hpp"

namespace pires {

enum class CongRule : std::uint8_t {
  kNuNuSwap,     // nu nu (swap P) ~ nu nu P
  kNuNuSwapInv,  // nu nu P ~ nu nu (swap P)
  kTrans,
  kZero,
  kInput,
  kOutput,
  kChoice,
  kPar,
  kRestrict,
  kReplicate
};

const char* cong_rule_name(CongRule r);
bool cong_rule_from_name(const std::string& s, CongRule* out);

class CongProof {
 public:
  struct Parts {
    CongRule rule = CongRule::kZero;
    Context ctx;
    Process source;
    Process target;
    Process payload;  // P of a swap step, in ctx+2
    Name x = 0;
    Name y = 0;
    std::vector<CongProof> children;
  };

  static CongProof nu_nu_swap(Context ctx, const Process& p);
  static CongProof nu_nu_swap_inv(Context ctx, const Process& p);
  // first : P ~ Q, second : Q ~ R.
  static CongProof trans(const CongProof& first, const CongProof& second);
  static CongProof zero(Context ctx);
  static CongProof input(Name x, const CongProof& body);
  static CongProof output(Name x, Name y, const CongProof& body);
  static CongProof choice(const CongProof& l, const CongProof& r);
  static CongProof par(const CongProof& l, const CongProof& r);
  static CongProof restrict(const CongProof& body);
  static CongProof replicate(const CongProof& body);
  static CongProof refl(Context ctx, const Process& p);

  static CongProof assemble(Parts parts);

  CongRule rule() const { return node_->parts.rule; }
  Context ctx() const { return node_->parts.ctx; }
  const Process& source() const { return node_->parts.source; }
  const Process& target() const { return node_->parts.target; }
  const Process& payload() const { return node_->parts.payload; }
  Name x() const { return node_->parts.x; }
  Name y() const { return node_->parts.y; }
  const std::vector<CongProof>& children() const {
    return node_->parts.children;
  }
  const CongProof& child(std::size_t i = 0) const {
    return node_->parts.children.at(i);
  }
  const Parts& parts() const { return node_->parts; }

  // Number of swap steps anywhere in the proof.
  std::size_t swap_steps() const { return node_->swaps; }

  friend bool operator==(const CongProof& a, const CongProof& b);
  friend bool operator!=(const CongProof& a, const CongProof& b) {
    return !(a == b);
  }

 private:
  struct Node {
    Parts parts;
    std::size_t swaps = 0;
  };
  explicit CongProof(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static CongProof checked(Parts parts);
  std::shared_ptr<const Node> node_;
};

Report validate_cong(const CongProof& phi);
CongProof reverse(const CongProof& phi);
// rho applied to both endpoints. Throws SizeMismatch unless dom(rho) = ctx.
CongProof residual_cong_after_renaming(const CongProof& phi,
                                       const Renaming& rho);

struct CongSearch {
  SearchStatus status = SearchStatus::kNotFound;
  std::optional<CongProof> proof;
  std::size_t explored = 0;
};

// Breadth-first search over single swap rewrites, visiting at most
// `budget` states.
CongSearch decide_cong(Context ctx, const Process& p, const Process& q,
                       std::size_t budget);

// (E/phi, phi/E). Throws NotCoinitial unless source(phi) = source(E).
std::pair<Transition, CongProof> residual_cong_transition(const Transition& e,
                                                          const CongProof& phi);

struct Braiding {
  Context ctx;      // context of source
  Process source;
  int delta = 0;    // 0 and 1 select the identity, 2 a swap
  std::size_t shift = 0;
  CongProof phi;    // apply(base(), source) ~ target

  Renaming base() const;
  const Process& target() const { return phi.target(); }
};

Braiding identity_braiding(Context ctx, const Process& p);
Report validate_braiding(const Braiding& g);
Braiding inverse(const Braiding& g);
// (E/gamma, gamma/E).
std::pair<Transition, Braiding> residual_braiding_transition(
    const Transition& e, const Braiding& g);

std::string format_cong(const CongProof& phi);

}  // namespace pires

#endif  // PIRES_CONGRUENCE_HPP_
