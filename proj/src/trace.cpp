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

#include "pires/trace.hpp"

#include <algorithm>
#include <unordered_map>

#include "pires/serialize.hpp"

namespace pires {

Report validate_actionseq(const ActionSeq& as) {
  Context ctx = as.ctx;
  for (std::size_t i = 0; i < as.actions.size(); ++i) {
    Context next;
    Report r = check_action_scope(ctx, as.actions[i], &next);
    if (!r) {
      r.path = "actions[" + std::to_string(i) + "]." + r.path;
      return r;
    }
    ctx = next;
  }
  return Report::success();
}

std::pair<ActionSeq, Renaming> rename_actionseq(const Renaming& rho, const ActionSeq& as) {
  if (rho.dom() != as.ctx)
    throw SizeMismatch("rename_actionseq: renaming domain does not match the sequence context");
  ActionSeq out{rho.cod(), {}};
  Renaming r = rho;
  for (const Action& a : as.actions) {
    out.actions.push_back(apply(r, a));
    r = residual_after_action(r, a);
  }
  return {out, r};
}

Trace::Trace(Context ctx, Process source, std::vector<Transition> steps)
    : ctx_(ctx), source_(std::move(source)), steps_(std::move(steps)) {}

Context Trace::target_ctx() const {
  return steps_.empty() ? ctx_ : steps_.back().target_ctx();
}

const Process& Trace::target() const {
  return steps_.empty() ? source_ : steps_.back().target();
}

ActionSeq Trace::actions() const {
  ActionSeq as{ctx_, {}};
  for (const auto& s : steps_) as.actions.push_back(s.action());
  return as;
}

Report validate_trace(const Trace& t) {
  Report r = check_scope(t.ctx(), t.source());
  if (!r) return Report::failure("trace.source", r.to_string());
  Context ctx = t.ctx();
  const Process* at = &t.source();
  for (std::size_t i = 0; i < t.steps().size(); ++i) {
    const Transition& s = t.steps()[i];
    std::string where = "steps[" + std::to_string(i) + "]";
    r = validate_transition(s);
    if (!r) return Report::failure(where + "/" + r.path, r.message);
    if (s.ctx() != ctx || s.source() != *at)
      return Report::failure(where, "step does not start where the previous one ends");
    ctx = s.target_ctx();
    at = &s.target();
  }
  return Report::success();
}

std::pair<Trace, Braiding> residual_trace_braiding(const Trace& t, const Braiding& g) {
  if (t.ctx() != g.ctx || t.source() != g.source)
    throw NotCoinitial("residual_trace_braiding: trace and braiding are not coinitial");
  std::vector<Transition> steps;
  Braiding cur = g;
  for (const auto& s : t.steps()) {
    auto [moved, next] = residual_braiding_transition(s, cur);
    steps.push_back(moved);
    cur = next;
  }
  return {Trace(g.ctx, g.target(), std::move(steps)), cur};
}

// ---------------------------------------------------------------------------
// Causal equivalence proofs.

const char* equiv_rule_name(EquivRule r) {
  switch (r) {
    case EquivRule::kNil:
      return "nil";
    case EquivRule::kCons:
      return "cons";
    case EquivRule::kTrans:
      return "trans";
    case EquivRule::kTranspose:
      return "transpose";
  }
  return "?";
}

CausalEquivProof CausalEquivProof::nil(Context ctx, const Process& p) {
  auto n = std::make_shared<Node>();
  n->rule = EquivRule::kNil;
  n->ctx = ctx;
  n->process = p;
  return CausalEquivProof(std::move(n));
}

CausalEquivProof CausalEquivProof::cons(const Transition& e, const CausalEquivProof& rest) {
  auto n = std::make_shared<Node>();
  n->rule = EquivRule::kCons;
  n->ctx = e.ctx();
  n->process = e.source();
  n->e = e;
  n->subs = {rest};
  return CausalEquivProof(std::move(n));
}

CausalEquivProof CausalEquivProof::trans(const CausalEquivProof& first,
                                         const CausalEquivProof& second) {
  auto n = std::make_shared<Node>();
  n->rule = EquivRule::kTrans;
  n->ctx = first.ctx();
  n->process = first.process();
  n->subs = {first, second};
  return CausalEquivProof(std::move(n));
}

CausalEquivProof CausalEquivProof::transpose(const Transition& e, const Transition& f,
                                             std::optional<ConcurProof> chi,
                                             const CausalEquivProof& rest) {
  auto n = std::make_shared<Node>();
  n->rule = EquivRule::kTranspose;
  n->ctx = e.ctx();
  n->process = e.source();
  n->e = e;
  n->f = f;
  n->chi = std::move(chi);
  n->subs = {rest};
  return CausalEquivProof(std::move(n));
}

CausalEquivProof CausalEquivProof::refl(const Trace& t) {
  CausalEquivProof p = nil(t.target_ctx(), t.target());
  for (std::size_t i = t.steps().size(); i-- > 0;) p = cons(t.steps()[i], p);
  return p;
}

namespace {

Trace prepend(const Transition& e, const Trace& t) {
  std::vector<Transition> steps{e};
  steps.insert(steps.end(), t.steps().begin(), t.steps().end());
  return Trace(e.ctx(), e.source(), std::move(steps));
}

Braiding rewire(const ConcurProof& chi, std::size_t cong_budget, Transition* e_after_f,
                Transition* f_after_e) {
  DiamondReport d = cofinality_witness(chi.left(), chi.right(), chi, cong_budget);
  if (d.status == SearchStatus::kBudgetExceeded)
    throw BudgetExceeded("rewire: congruence search budget exceeded");
  if (!d.braiding) throw ProofMismatch("rewire: residual targets are not congruent");
  *e_after_f = d.e_after_f;
  *f_after_e = d.f_after_e;
  return *d.braiding;
}

}  // namespace

std::pair<Trace, Trace> equiv_endpoints(const CausalEquivProof& a, std::size_t cong_budget) {
  switch (a.rule()) {
    case EquivRule::kNil:
      return {Trace(a.ctx(), a.process()), Trace(a.ctx(), a.process())};
    case EquivRule::kCons: {
      auto [t, u] = equiv_endpoints(a.sub(), cong_budget);
      const Transition& e = a.step();
      if (t.ctx() != e.target_ctx() || t.source() != e.target())
        throw ProofMismatch("cons: rest does not start at the step's target");
      return {prepend(e, t), prepend(e, u)};
    }
    case EquivRule::kTrans: {
      auto [t1, u1] = equiv_endpoints(a.sub(0), cong_budget);
      auto [t2, u2] = equiv_endpoints(a.sub(1), cong_budget);
      if (u1 != t2) throw ProofMismatch("trans: middle traces differ");
      return {t1, u2};
    }
    case EquivRule::kTranspose: {
      const Transition& e = a.step();
      const Transition& f = a.other();
      if (!a.chi()) throw ProofMismatch("transpose: no concurrency proof");
      const ConcurProof& chi = *a.chi();
      if (chi.left() != e || chi.right() != f || !validate_concur(chi))
        throw ProofMismatch("transpose: no concurrency proof for the transposed steps");
      Transition ef = e, fe = f;
      Braiding g = rewire(chi, cong_budget, &ef, &fe);
      auto [t0, u0] = equiv_endpoints(a.sub(), cong_budget);
      if (t0.ctx() != fe.target_ctx() || t0.source() != fe.target())
        throw ProofMismatch("transpose: rest does not start after the two steps");
      Trace moved = residual_trace_braiding(u0, g).first;
      return {prepend(e, prepend(fe, t0)), prepend(f, prepend(ef, moved))};
    }
  }
  throw ProofMismatch("unknown equivalence rule");
}

Report validate_causal_equiv(const CausalEquivProof& alpha, const Trace& t, const Trace& u,
                             std::size_t cong_budget) {
  Report r = validate_trace(t);
  if (!r) return Report::failure("t/" + r.path, r.message);
  r = validate_trace(u);
  if (!r) return Report::failure("u/" + r.path, r.message);
  std::pair<Trace, Trace> ends{t, u};
  try {
    ends = equiv_endpoints(alpha, cong_budget);
  } catch (const Error& e) {
    return Report::failure(equiv_rule_name(alpha.rule()), e.what());
  }
  if (ends.first != t) return Report::failure("proof", "left endpoint is not t");
  if (ends.second != u) return Report::failure("proof", "right endpoint is not u");
  return Report::success();
}

// ---------------------------------------------------------------------------
// Search.

std::vector<Transposition> transpositions(const Trace& t, const TraceSearchConfig& cfg) {
  std::vector<Transposition> out;
  const auto& steps = t.steps();
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    const Transition& a = steps[i];
    const Transition& b = steps[i + 1];
    // Residuation can only strip Rep levels shared with a, so this budget
    // reaches every candidate whose residual could be b.
    std::size_t budget = std::max(cfg.unfold_budget, rep_depth(a) + rep_depth(b));
    for (const Transition& other : enumerate_transitions(a.ctx(), a.source(), budget)) {
      auto chi = decide_concurrent(a, other);
      if (!chi) continue;
      if (residual(flip(*chi)) != b) continue;
      Transition ab = a, ba = b;
      Braiding g = rewire(*chi, cfg.cong_budget, &ab, &ba);
      Trace suffix(b.target_ctx(), b.target(),
                   std::vector<Transition>(steps.begin() + i + 2, steps.end()));
      Trace moved = residual_trace_braiding(suffix, g).first;
      std::vector<Transition> ns(steps.begin(), steps.begin() + i);
      ns.push_back(other);
      ns.push_back(ab);
      ns.insert(ns.end(), moved.steps().begin(), moved.steps().end());
      CausalEquivProof proof =
          CausalEquivProof::transpose(a, other, *chi, CausalEquivProof::refl(suffix));
      for (std::size_t k = i; k-- > 0;) proof = CausalEquivProof::cons(steps[k], proof);
      out.push_back(Transposition{i, other, *chi, g, Trace(t.ctx(), t.source(), std::move(ns)),
                                  proof});
    }
  }
  return out;
}

EquivSearch decide_causal_equiv(const Trace& t, const Trace& u, std::size_t budget,
                                const TraceSearchConfig& cfg) {
  if (t.ctx() != u.ctx() || t.source() != u.source())
    throw NotCoinitial("decide_causal_equiv: traces are not coinitial");
  EquivSearch out;
  if (t == u) {
    out.status = SearchStatus::kFound;
    out.proof = CausalEquivProof::refl(t);
    out.explored = 1;
    return out;
  }
  // Transposition preserves length, so different lengths never meet.
  if (t.length() != u.length()) {
    out.explored = 1;
    return out;
  }
  struct Entry {
    Trace trace;
    std::size_t parent;
    std::optional<CausalEquivProof> step;
    std::optional<Braiding> rewire;
  };
  std::vector<Entry> states{{t, 0, std::nullopt, std::nullopt}};
  std::unordered_map<std::string, std::size_t> seen{{to_json(t).dump(), 0}};
  const std::string goal = to_json(u).dump();
  for (std::size_t i = 0; i < states.size(); ++i) {
    std::vector<Transposition> moves;
    try {
      moves = transpositions(states[i].trace, cfg);
    } catch (const BudgetExceeded&) {
      out.status = SearchStatus::kBudgetExceeded;
      out.explored = states.size();
      return out;
    }
    for (auto& m : moves) {
      std::string key = to_json(m.result).dump();
      if (!seen.emplace(key, states.size()).second) continue;
      states.push_back({m.result, i, m.proof, m.rewire});
      if (key == goal) {
        std::vector<std::size_t> path;
        for (std::size_t j = states.size() - 1; j != 0; j = states[j].parent) path.push_back(j);
        std::reverse(path.begin(), path.end());
        CausalEquivProof proof = *states[path[0]].step;
        out.trail.push_back(*states[path[0]].rewire);
        for (std::size_t k = 1; k < path.size(); ++k) {
          proof = CausalEquivProof::trans(proof, *states[path[k]].step);
          out.trail.push_back(*states[path[k]].rewire);
        }
        out.status = SearchStatus::kFound;
        out.proof = proof;
        out.explored = states.size();
        return out;
      }
      if (states.size() > budget) {
        out.status = SearchStatus::kBudgetExceeded;
        out.explored = states.size();
        return out;
      }
    }
  }
  out.explored = states.size();
  return out;
}

}  // namespace pires
