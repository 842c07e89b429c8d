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

// Traces, their residuals along braidings, and causal equivalence.

#ifndef PIRES_TRACE_HPP_
#define PIRES_TRACE_HPP_

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "pires/concurrency.hpp"
#include "pires/congruence.hpp"
#include "pires/renaming.hpp"
#include "pires/semantics.hpp"

namespace pires {

struct ActionSeq {
  Context ctx;
  std::vector<Action> actions;

  friend bool operator==(const ActionSeq& a, const ActionSeq& b) {
    return a.ctx == b.ctx && a.actions == b.actions;
  }
};

Report validate_actionseq(const ActionSeq& as);
// (rho applied along the sequence, rho after the whole sequence).
std::pair<ActionSeq, Renaming> rename_actionseq(const Renaming& rho,
                                                const ActionSeq& as);

class Trace {
 public:
  Trace(Context ctx, Process source, std::vector<Transition> steps = {});

  Context ctx() const { return ctx_; }
  const Process& source() const { return source_; }
  const std::vector<Transition>& steps() const { return steps_; }
  std::size_t length() const { return steps_.size(); }
  Context target_ctx() const;
  const Process& target() const;
  ActionSeq actions() const;

  friend bool operator==(const Trace& a, const Trace& b) {
    return a.ctx_ == b.ctx_ && a.source_ == b.source_ && a.steps_ == b.steps_;
  }
  friend bool operator!=(const Trace& a, const Trace& b) { return !(a == b); }

 private:
  Context ctx_;
  Process source_;
  std::vector<Transition> steps_;
};

Report validate_trace(const Trace& t);
// (t/gamma, gamma/t).
std::pair<Trace, Braiding> residual_trace_braiding(const Trace& t,
                                                   const Braiding& g);

enum class EquivRule { kNil, kCons, kTrans, kTranspose };
const char* equiv_rule_name(EquivRule r);

class CausalEquivProof {
 public:
  static CausalEquivProof nil(Context ctx, const Process& p);
  static CausalEquivProof cons(const Transition& e, const CausalEquivProof& rest);
  // first : t ~ t', second : t' ~ u.
  static CausalEquivProof trans(const CausalEquivProof& first,
                                const CausalEquivProof& second);
  // E :: E'/E :: t0  ~  E' :: E/E' :: u0/rewire(E, E'), from rest : t0 ~ u0.
  // chi may be absent; such a proof never validates.
  static CausalEquivProof transpose(const Transition& e, const Transition& f,
                                    std::optional<ConcurProof> chi,
                                    const CausalEquivProof& rest);
  // Cons chain over t.
  static CausalEquivProof refl(const Trace& t);

  EquivRule rule() const { return node_->rule; }
  Context ctx() const { return node_->ctx; }
  const Process& process() const { return node_->process; }
  const Transition& step() const { return *node_->e; }
  const Transition& other() const { return *node_->f; }
  const std::optional<ConcurProof>& chi() const { return node_->chi; }
  const CausalEquivProof& sub(std::size_t i = 0) const {
    return node_->subs.at(i);
  }
  const std::vector<CausalEquivProof>& subs() const { return node_->subs; }

 private:
  struct Node {
    EquivRule rule = EquivRule::kNil;
    Context ctx;
    Process process;
    std::optional<Transition> e;
    std::optional<Transition> f;
    std::optional<ConcurProof> chi;
    std::vector<CausalEquivProof> subs;
  };
  explicit CausalEquivProof(std::shared_ptr<const Node> n)
      : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// The pair of traces a proof relates. Throws ProofMismatch for a malformed
// proof and BudgetExceeded if a rewire search runs out.
std::pair<Trace, Trace> equiv_endpoints(const CausalEquivProof& alpha,
                                        std::size_t cong_budget);

Report validate_causal_equiv(const CausalEquivProof& alpha, const Trace& t,
                             const Trace& u, std::size_t cong_budget = 100000);

struct TraceSearchConfig {
  std::size_t unfold_budget = 2;
  std::size_t cong_budget = 100000;
};

// One adjacent transposition applied to a trace.
struct Transposition {
  std::size_t position = 0;
  Transition other;  // the step moved to the front at `position`
  ConcurProof chi;   // steps[position] ~ other
  Braiding rewire;   // along which the suffix was transported
  Trace result;
  CausalEquivProof proof;  // trace ~ result
};

// All single transpositions available in t. Throws BudgetExceeded if a
// rewire search runs out.
std::vector<Transposition> transpositions(const Trace& t,
                                          const TraceSearchConfig& cfg);

struct EquivSearch {
  SearchStatus status = SearchStatus::kNotFound;
  std::optional<CausalEquivProof> proof;
  std::size_t explored = 0;
  std::vector<Braiding> trail;  // rewire braidings along the found path
};

EquivSearch decide_causal_equiv(const Trace& t, const Trace& u,
                                std::size_t budget,
                                const TraceSearchConfig& cfg = {});

}  // namespace pires

#endif  // PIRES_TRACE_HPP_
