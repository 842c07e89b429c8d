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

#include "pires/congruence.hpp"

#include <array>
#include <unordered_set>

namespace pires {

namespace {

constexpr std::array<const char*, 10> kCongNames = {
    "nuNuSwap", "nuNuSwapInv", "trans", "zero", "input",
    "output", "choice", "par", "restrict", "replicate"};

Process nunu(const Process& p) { return Process::restrict(Process::restrict(p)); }

Report cfail(const CongProof::Parts& t, const std::string& msg) {
  return Report::failure(cong_rule_name(t.rule), msg);
}

Report check_cong_node(const CongProof::Parts& t) {
  std::size_t want = 0;
  switch (t.rule) {
    case CongRule::kNuNuSwap:
    case CongRule::kNuNuSwapInv:
    case CongRule::kZero:
      want = 0;
      break;
    case CongRule::kTrans:
    case CongRule::kChoice:
    case CongRule::kPar:
      want = 2;
      break;
    default:
      want = 1;
  }
  if (t.children.size() != want)
    return cfail(t, "expected " + std::to_string(want) + " sub-proofs");
  Context inner = t.ctx;
  if (t.rule == CongRule::kInput || t.rule == CongRule::kRestrict)
    inner = t.ctx.extend();
  for (const CongProof& c : t.children)
    if (c.ctx() != inner) return cfail(t, "sub-proof context mismatch");

  switch (t.rule) {
    case CongRule::kNuNuSwap:
    case CongRule::kNuNuSwapInv: {
      Report r = check_scope(t.ctx.extend(2), t.payload);
      if (!r) return cfail(t, "payload not closed: " + r.to_string());
      Process swapped = nunu(apply(Renaming::swap(t.ctx), t.payload));
      Process plain = nunu(t.payload);
      bool fwd = t.rule == CongRule::kNuNuSwap;
      if (t.source != (fwd ? swapped : plain)) return cfail(t, "source mismatch");
      if (t.target != (fwd ? plain : swapped)) return cfail(t, "target mismatch");
      return Report::success();
    }
    case CongRule::kTrans: {
      const CongProof& a = t.children[0];
      const CongProof& b = t.children[1];
      if (a.target() != b.source()) return cfail(t, "proofs do not compose");
      if (t.source != a.source() || t.target != b.target())
        return cfail(t, "endpoint mismatch");
      return Report::success();
    }
    case CongRule::kZero:
      if (t.source.kind() != ProcessKind::kZero || t.target.kind() != ProcessKind::kZero)
        return cfail(t, "endpoints are not 0");
      return Report::success();
    case CongRule::kInput: {
      if (t.x >= t.ctx.size) return Report::failure("input", "name out of scope", t.x);
      const CongProof& c = t.children[0];
      if (t.source != Process::input(t.x, c.source()) ||
          t.target != Process::input(t.x, c.target()))
        return cfail(t, "endpoint mismatch");
      return Report::success();
    }
    case CongRule::kOutput: {
      if (t.x >= t.ctx.size) return Report::failure("output", "name out of scope", t.x);
      if (t.y >= t.ctx.size) return Report::failure("output", "name out of scope", t.y);
      const CongProof& c = t.children[0];
      if (t.source != Process::output(t.x, t.y, c.source()) ||
          t.target != Process::output(t.x, t.y, c.target()))
        return cfail(t, "endpoint mismatch");
      return Report::success();
    }
    case CongRule::kChoice:
    case CongRule::kPar: {
      auto mk = t.rule == CongRule::kChoice ? Process::choice : Process::par;
      const CongProof& a = t.children[0];
      const CongProof& b = t.children[1];
      if (t.source != mk(a.source(), b.source()) ||
          t.target != mk(a.target(), b.target()))
        return cfail(t, "endpoint mismatch");
      return Report::success();
    }
    case CongRule::kRestrict:
    case CongRule::kReplicate: {
      auto mk = t.rule == CongRule::kRestrict ? Process::restrict : Process::replicate;
      const CongProof& c = t.children[0];
      if (t.source != mk(c.source()) || t.target != mk(c.target()))
        return cfail(t, "endpoint mismatch");
      return Report::success();
    }
  }
  return cfail(t, "unknown rule");
}

Report validate_cong_rec(const CongProof& phi, const std::string& path) {
  std::string here = path.empty() ? cong_rule_name(phi.rule())
                                  : path + "/" + cong_rule_name(phi.rule());
  for (std::size_t i = 0; i < phi.children().size(); ++i) {
    Report r = validate_cong_rec(phi.children()[i], here + "[" + std::to_string(i) + "]");
    if (!r) return r;
  }
  Report r = check_cong_node(phi.parts());
  if (!r) r.path = here;
  return r;
}

}  // namespace

const char* cong_rule_name(CongRule r) { return kCongNames[static_cast<int>(r)]; }

bool cong_rule_from_name(const std::string& s, CongRule* out) {
  for (std::size_t i = 0; i < kCongNames.size(); ++i) {
    if (s == kCongNames[i]) {
      *out = static_cast<CongRule>(i);
      return true;
    }
  }
  return false;
}

CongProof CongProof::assemble(Parts parts) {
  auto n = std::make_shared<Node>();
  n->swaps = (parts.rule == CongRule::kNuNuSwap ||
              parts.rule == CongRule::kNuNuSwapInv) ? 1 : 0;
  for (const CongProof& c : parts.children) n->swaps += c.swap_steps();
  n->parts = std::move(parts);
  return CongProof(std::move(n));
}

CongProof CongProof::checked(Parts parts) {
  Report r = check_cong_node(parts);
  if (!r) throw DerivationError(r.to_string());
  return assemble(std::move(parts));
}

bool operator==(const CongProof& a, const CongProof& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = a.parts();
  const auto& y = b.parts();
  if (x.rule != y.rule || x.ctx != y.ctx || x.x != y.x || x.y != y.y) return false;
  if (x.source != y.source || x.target != y.target) return false;
  if ((x.rule == CongRule::kNuNuSwap || x.rule == CongRule::kNuNuSwapInv) &&
      x.payload != y.payload)
    return false;
  return x.children == y.children;
}

CongProof CongProof::nu_nu_swap(Context ctx, const Process& p) {
  Parts t;
  t.rule = CongRule::kNuNuSwap;
  t.ctx = ctx;
  t.payload = p;
  t.source = nunu(apply(Renaming::swap(ctx), p));
  t.target = nunu(p);
  return checked(std::move(t));
}

CongProof CongProof::nu_nu_swap_inv(Context ctx, const Process& p) {
  Parts t;
  t.rule = CongRule::kNuNuSwapInv;
  t.ctx = ctx;
  t.payload = p;
  t.source = nunu(p);
  t.target = nunu(apply(Renaming::swap(ctx), p));
  return checked(std::move(t));
}

CongProof CongProof::trans(const CongProof& first, const CongProof& second) {
  Parts t;
  t.rule = CongRule::kTrans;
  t.ctx = first.ctx();
  t.source = first.source();
  t.target = second.target();
  t.children = {first, second};
  return checked(std::move(t));
}

CongProof CongProof::zero(Context ctx) {
  Parts t;
  t.rule = CongRule::kZero;
  t.ctx = ctx;
  return checked(std::move(t));
}

CongProof CongProof::input(Name x, const CongProof& body) {
  if (body.ctx().size == 0) throw DerivationError("input: body context is empty");
  Parts t;
  t.rule = CongRule::kInput;
  t.ctx = Context{body.ctx().size - 1};
  t.x = x;
  t.source = Process::input(x, body.source());
  t.target = Process::input(x, body.target());
  t.children = {body};
  return checked(std::move(t));
}

CongProof CongProof::output(Name x, Name y, const CongProof& body) {
  Parts t;
  t.rule = CongRule::kOutput;
  t.ctx = body.ctx();
  t.x = x;
  t.y = y;
  t.source = Process::output(x, y, body.source());
  t.target = Process::output(x, y, body.target());
  t.children = {body};
  return checked(std::move(t));
}

CongProof CongProof::choice(const CongProof& l, const CongProof& r) {
  Parts t;
  t.rule = CongRule::kChoice;
  t.ctx = l.ctx();
  t.source = Process::choice(l.source(), r.source());
  t.target = Process::choice(l.target(), r.target());
  t.children = {l, r};
  return checked(std::move(t));
}

CongProof CongProof::par(const CongProof& l, const CongProof& r) {
  Parts t;
  t.rule = CongRule::kPar;
  t.ctx = l.ctx();
  t.source = Process::par(l.source(), r.source());
  t.target = Process::par(l.target(), r.target());
  t.children = {l, r};
  return checked(std::move(t));
}

CongProof CongProof::restrict(const CongProof& body) {
  if (body.ctx().size == 0) throw DerivationError("restrict: body context is empty");
  Parts t;
  t.rule = CongRule::kRestrict;
  t.ctx = Context{body.ctx().size - 1};
  t.source = Process::restrict(body.source());
  t.target = Process::restrict(body.target());
  t.children = {body};
  return checked(std::move(t));
}

CongProof CongProof::replicate(const CongProof& body) {
  Parts t;
  t.rule = CongRule::kReplicate;
  t.ctx = body.ctx();
  t.source = Process::replicate(body.source());
  t.target = Process::replicate(body.target());
  t.children = {body};
  return checked(std::move(t));
}

CongProof CongProof::refl(Context ctx, const Process& p) {
  switch (p.kind()) {
    case ProcessKind::kZero:
      return zero(ctx);
    case ProcessKind::kInput:
      return input(p.channel(), refl(ctx.extend(), p.body()));
    case ProcessKind::kOutput:
      return output(p.channel(), p.payload(), refl(ctx, p.body()));
    case ProcessKind::kChoice:
      return choice(refl(ctx, p.left()), refl(ctx, p.right()));
    case ProcessKind::kPar:
      return par(refl(ctx, p.left()), refl(ctx, p.right()));
    case ProcessKind::kRestrict:
      return restrict(refl(ctx.extend(), p.body()));
    case ProcessKind::kReplicate:
      return replicate(refl(ctx, p.body()));
  }
  throw DerivationError("refl: unknown process");
}

Report validate_cong(const CongProof& phi) { return validate_cong_rec(phi, ""); }

CongProof reverse(const CongProof& phi) {
  const auto& c = phi.children();
  switch (phi.rule()) {
    case CongRule::kNuNuSwap:
      return CongProof::nu_nu_swap_inv(phi.ctx(), phi.payload());
    case CongRule::kNuNuSwapInv:
      return CongProof::nu_nu_swap(phi.ctx(), phi.payload());
    case CongRule::kTrans:
      return CongProof::trans(reverse(c[1]), reverse(c[0]));
    case CongRule::kZero:
      return phi;
    case CongRule::kInput:
      return CongProof::input(phi.x(), reverse(c[0]));
    case CongRule::kOutput:
      return CongProof::output(phi.x(), phi.y(), reverse(c[0]));
    case CongRule::kChoice:
      return CongProof::choice(reverse(c[0]), reverse(c[1]));
    case CongRule::kPar:
      return CongProof::par(reverse(c[0]), reverse(c[1]));
    case CongRule::kRestrict:
      return CongProof::restrict(reverse(c[0]));
    case CongRule::kReplicate:
      return CongProof::replicate(reverse(c[0]));
  }
  throw DerivationError("reverse: unknown rule");
}

CongProof residual_cong_after_renaming(const CongProof& phi, const Renaming& rho) {
  if (rho.dom() != phi.ctx())
    throw SizeMismatch("residual_cong_after_renaming: renaming domain size " +
                       std::to_string(rho.dom().size) + " differs from context size " +
                       std::to_string(phi.ctx().size));
  const auto& c = phi.children();
  switch (phi.rule()) {
    case CongRule::kNuNuSwap:
      return CongProof::nu_nu_swap(rho.cod(), apply(lift(rho, 2), phi.payload()));
    case CongRule::kNuNuSwapInv:
      return CongProof::nu_nu_swap_inv(rho.cod(), apply(lift(rho, 2), phi.payload()));
    case CongRule::kTrans:
      return CongProof::trans(residual_cong_after_renaming(c[0], rho),
                              residual_cong_after_renaming(c[1], rho));
    case CongRule::kZero:
      return CongProof::zero(rho.cod());
    case CongRule::kInput:
      return CongProof::input(rho(phi.x()), residual_cong_after_renaming(c[0], lift(rho)));
    case CongRule::kOutput:
      return CongProof::output(rho(phi.x()), rho(phi.y()),
                               residual_cong_after_renaming(c[0], rho));
    case CongRule::kChoice:
      return CongProof::choice(residual_cong_after_renaming(c[0], rho),
                               residual_cong_after_renaming(c[1], rho));
    case CongRule::kPar:
      return CongProof::par(residual_cong_after_renaming(c[0], rho),
                            residual_cong_after_renaming(c[1], rho));
    case CongRule::kRestrict:
      return CongProof::restrict(residual_cong_after_renaming(c[0], lift(rho)));
    case CongRule::kReplicate:
      return CongProof::replicate(residual_cong_after_renaming(c[0], rho));
  }
  throw DerivationError("residual_cong_after_renaming: unknown rule");
}

// ---------------------------------------------------------------------------
// Decision procedure.

namespace {

bool is_nunu(const Process& p) {
  return p.kind() == ProcessKind::kRestrict &&
         p.body().kind() == ProcessKind::kRestrict;
}

// All single-swap rewrites of p, root first, then children left to right.
void neighbours(Context ctx, const Process& p, std::vector<Process>& out) {
  if (is_nunu(p))
    out.push_back(nunu(apply(Renaming::swap(ctx), p.body().body())));
  std::vector<Process> sub;
  switch (p.kind()) {
    case ProcessKind::kZero:
      return;
    case ProcessKind::kInput:
      neighbours(ctx.extend(), p.body(), sub);
      for (auto& s : sub) out.push_back(Process::input(p.channel(), s));
      return;
    case ProcessKind::kOutput:
      neighbours(ctx, p.body(), sub);
      for (auto& s : sub) out.push_back(Process::output(p.channel(), p.payload(), s));
      return;
    case ProcessKind::kChoice:
    case ProcessKind::kPar: {
      auto mk = p.kind() == ProcessKind::kChoice ? Process::choice : Process::par;
      neighbours(ctx, p.left(), sub);
      for (auto& s : sub) out.push_back(mk(s, p.right()));
      sub.clear();
      neighbours(ctx, p.right(), sub);
      for (auto& s : sub) out.push_back(mk(p.left(), s));
      return;
    }
    case ProcessKind::kRestrict:
      neighbours(ctx.extend(), p.body(), sub);
      for (auto& s : sub) out.push_back(Process::restrict(s));
      return;
    case ProcessKind::kReplicate:
      neighbours(ctx, p.body(), sub);
      for (auto& s : sub) out.push_back(Process::replicate(s));
      return;
  }
}

// Proof of the k-th rewrite in the order of `neighbours`.
std::optional<CongProof> step_proof(Context ctx, const Process& p, std::size_t& k) {
  if (is_nunu(p)) {
    if (k == 0)
      return CongProof::nu_nu_swap(ctx, apply(Renaming::swap(ctx), p.body().body()));
    --k;
  }
  switch (p.kind()) {
    case ProcessKind::kZero:
      return std::nullopt;
    case ProcessKind::kInput:
      if (auto s = step_proof(ctx.extend(), p.body(), k))
        return CongProof::input(p.channel(), *s);
      return std::nullopt;
    case ProcessKind::kOutput:
      if (auto s = step_proof(ctx, p.body(), k))
        return CongProof::output(p.channel(), p.payload(), *s);
      return std::nullopt;
    case ProcessKind::kChoice:
    case ProcessKind::kPar: {
      auto mk = p.kind() == ProcessKind::kChoice ? CongProof::choice : CongProof::par;
      if (auto s = step_proof(ctx, p.left(), k))
        return mk(*s, CongProof::refl(ctx, p.right()));
      if (auto s = step_proof(ctx, p.right(), k))
        return mk(CongProof::refl(ctx, p.left()), *s);
      return std::nullopt;
    }
    case ProcessKind::kRestrict:
      if (auto s = step_proof(ctx.extend(), p.body(), k)) return CongProof::restrict(*s);
      return std::nullopt;
    case ProcessKind::kReplicate:
      if (auto s = step_proof(ctx, p.body(), k)) return CongProof::replicate(*s);
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

CongSearch decide_cong(Context ctx, const Process& p, const Process& q,
                       std::size_t budget) {
  Report r = check_scope(ctx, p);
  if (!r) throw ScopeError("decide_cong: " + r.to_string());
  r = check_scope(ctx, q);
  if (!r) throw ScopeError("decide_cong: " + r.to_string());

  CongSearch out;
  if (p == q) {
    out.status = SearchStatus::kFound;
    out.proof = CongProof::refl(ctx, p);
    out.explored = 1;
    return out;
  }
  // Swaps preserve size and shape up to the binder order, so a cheap
  // size check rules out most negatives.
  if (p.size() != q.size()) {
    out.explored = 1;
    return out;
  }
  struct Entry {
    Process state;
    std::size_t parent;
    std::size_t site;
  };
  std::vector<Entry> states{{p, 0, 0}};
  std::unordered_set<Process> seen{p};
  std::vector<Process> nbrs;
  for (std::size_t i = 0; i < states.size(); ++i) {
    nbrs.clear();
    neighbours(ctx, states[i].state, nbrs);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      if (!seen.insert(nbrs[k]).second) continue;
      states.push_back({nbrs[k], i, k});
      if (nbrs[k] == q) {
        std::vector<CongProof> steps;
        for (std::size_t j = states.size() - 1; j != 0; j = states[j].parent) {
          std::size_t site = states[j].site;
          steps.push_back(*step_proof(ctx, states[states[j].parent].state, site));
        }
        CongProof proof = steps.back();
        for (std::size_t s = steps.size() - 1; s-- > 0;)
          proof = CongProof::trans(proof, steps[s]);
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

// ---------------------------------------------------------------------------
// Residuals of transitions and congruences.

namespace {

std::pair<Transition, CongProof> rct(const Transition& e, const CongProof& phi);

// phi is a single swap at the root, so E is two nested restriction rules.
std::pair<Transition, CongProof> swap_case(const Transition& e, const CongProof& phi) {
  Context ctx = e.ctx();
  const Transition& inner = e.premise();
  if (inner.premises().empty())
    throw ProofMismatch("swap residual: transition is not two restriction steps");
  const Transition& e0 = inner.premise();
  Transition es = rename_transition(e0, Renaming::swap(ctx));
  Rule outer_rule = e.rule();
  Rule inner_rule = inner.rule();
  Transition res = es;
  CongProof back = CongProof::zero(ctx);
  if (outer_rule == Rule::kRestrictOutput && inner_rule == Rule::kRestrictA) {
    res = Transition::restrict_a(Transition::restrict_output(es));
    back = CongProof::refl(e.target_ctx(), e.target());
  } else if (outer_rule == Rule::kRestrictA && inner_rule == Rule::kRestrictOutput) {
    res = Transition::restrict_output(Transition::restrict_a(es));
    back = CongProof::refl(e.target_ctx(), e.target());
  } else if (outer_rule == Rule::kRestrictA && inner_rule == Rule::kRestrictA) {
    // Both actions bound or both non-bound; for the bound pair the two
    // targets agree by the swap/lift-swap braid identity.
    res = Transition::restrict_a(Transition::restrict_a(es));
    back = CongProof::nu_nu_swap_inv(e.target_ctx(), e.target().body().body());
  } else {
    throw ProofMismatch("swap residual: unexpected restriction shape");
  }
  if (res.source() != phi.target() || back.target() != res.target())
    throw ProofMismatch("swap residual: endpoints do not meet");
  return {res, back};
}

std::pair<Transition, CongProof> rct(const Transition& e, const CongProof& phi) {
  const auto& c = phi.children();
  Context ctx = e.ctx();
  switch (phi.rule()) {
    case CongRule::kTrans: {
      auto [e1, p1] = rct(e, c[0]);
      auto [e2, p2] = rct(e1, c[1]);
      return {e2, CongProof::trans(p1, p2)};
    }
    case CongRule::kNuNuSwap:
    case CongRule::kNuNuSwapInv:
      return swap_case(e, phi);
    case CongRule::kZero:
      throw NotCoinitial("0 has no transitions");
    case CongRule::kInput:
    case CongRule::kOutput:
      return {Transition::prefix(ctx, phi.target()), c[0]};
    case CongRule::kChoice:
      if (e.rule() == Rule::kChoiceL) {
        auto [e1, p1] = rct(e.premise(), c[0]);
        return {Transition::choice_l(e1, c[1].target()), p1};
      } else {
        auto [e1, p1] = rct(e.premise(), c[1]);
        return {Transition::choice_r(c[0].target(), e1), p1};
      }
    case CongRule::kPar: {
      bool bound = e.action().is_bound();
      switch (e.rule()) {
        case Rule::kParL: {
          auto [e1, p1] = rct(e.premise(), c[0]);
          CongProof moved = bound ? residual_cong_after_renaming(c[1], Renaming::push(ctx)) : c[1];
          return {Transition::par_l(e1, c[1].target()), CongProof::par(p1, moved)};
        }
        case Rule::kParR: {
          auto [f1, q1] = rct(e.premise(), c[1]);
          CongProof moved = bound ? residual_cong_after_renaming(c[0], Renaming::push(ctx)) : c[0];
          return {Transition::par_r(c[0].target(), f1), CongProof::par(moved, q1)};
        }
        case Rule::kParLTau: {
          auto [e1, p1] = rct(e.premise(0), c[0]);
          auto [f1, q1] = rct(e.premise(1), c[1]);
          Renaming pop = Renaming::pop(ctx, e.y());
          return {Transition::par_l_tau(e1, f1),
                  CongProof::par(residual_cong_after_renaming(p1, pop), q1)};
        }
        case Rule::kParRTau: {
          auto [e1, p1] = rct(e.premise(0), c[0]);
          auto [f1, q1] = rct(e.premise(1), c[1]);
          Renaming pop = Renaming::pop(ctx, e.y());
          return {Transition::par_r_tau(e1, f1),
                  CongProof::par(p1, residual_cong_after_renaming(q1, pop))};
        }
        case Rule::kParLNu:
        case Rule::kParRNu: {
          auto [e1, p1] = rct(e.premise(0), c[0]);
          auto [f1, q1] = rct(e.premise(1), c[1]);
          Transition t = e.rule() == Rule::kParLNu ? Transition::par_l_nu(e1, f1)
                                                   : Transition::par_r_nu(e1, f1);
          return {t, CongProof::restrict(CongProof::par(p1, q1))};
        }
        default:
          throw NotCoinitial("congruence and transition disagree on the source");
      }
    }
    case CongRule::kRestrict: {
      auto [e1, p1] = rct(e.premise(), c[0]);
      if (e.rule() == Rule::kRestrictOutput)
        return {Transition::restrict_output(e1), p1};
      CongProof back = e.action().is_bound()
                           ? residual_cong_after_renaming(p1, Renaming::swap(ctx))
                           : p1;
      return {Transition::restrict_a(e1), CongProof::restrict(back)};
    }
    case CongRule::kReplicate: {
      CongProof unfolded = CongProof::par(c[0], phi);
      auto [e1, p1] = rct(e.premise(), unfolded);
      return {Transition::rep(e1), p1};
    }
  }
  throw NotCoinitial("unknown congruence rule");
}

}  // namespace

std::pair<Transition, CongProof> residual_cong_transition(const Transition& e,
                                                          const CongProof& phi) {
  if (e.ctx() != phi.ctx() || e.source() != phi.source())
    throw NotCoinitial("residual_cong_transition: transition and congruence are not coinitial");
  return rct(e, phi);
}

// ---------------------------------------------------------------------------
// Braidings.

Renaming Braiding::base() const {
  if (delta != 2) return Renaming::identity(ctx);
  if (ctx.size < 2 + shift)
    throw ScopeError("braiding: context too small for a shifted swap");
  return lift(Renaming::swap(Context{ctx.size - 2 - shift}), shift);
}

Braiding identity_braiding(Context ctx, const Process& p) {
  return Braiding{ctx, p, 0, 0, CongProof::refl(ctx, p)};
}

Report validate_braiding(const Braiding& g) {
  if (g.delta < 0 || g.delta > 2) return Report::failure("braiding", "delta out of range");
  Report r = check_scope(g.ctx, g.source);
  if (!r) return Report::failure("braiding.source", r.to_string());
  if (g.phi.ctx() != g.ctx) return Report::failure("braiding.phi", "context mismatch");
  r = validate_cong(g.phi);
  if (!r) {
    r.path = "braiding.phi/" + r.path;
    return r;
  }
  if (g.delta == 2 && g.ctx.size < 2 + g.shift)
    return Report::failure("braiding", "context too small for a shifted swap");
  if (apply(g.base(), g.source) != g.phi.source())
    return Report::failure("braiding", "base renaming does not take source to the congruence source");
  return Report::success();
}

Braiding inverse(const Braiding& g) {
  Renaming sigma = g.base();
  return Braiding{g.ctx, g.target(), g.delta, g.shift,
                  residual_cong_after_renaming(reverse(g.phi), sigma)};
}

std::pair<Transition, Braiding> residual_braiding_transition(const Transition& e,
                                                             const Braiding& g) {
  if (e.ctx() != g.ctx || e.source() != g.source)
    throw NotCoinitial("residual_braiding_transition: transition and braiding are not coinitial");
  Transition es = rename_transition(e, g.base());
  auto [moved, back] = residual_cong_transition(es, g.phi);
  Braiding after{e.target_ctx(), e.target(), g.delta,
                 g.shift + (e.action().is_bound() ? 1 : 0), back};
  return {moved, after};
}

std::string format_cong(const CongProof& phi) {
  if (phi.swap_steps() == 0) return "refl";
  const auto& c = phi.children();
  switch (phi.rule()) {
    case CongRule::kNuNuSwap:
      return "νν-swap";
    case CongRule::kNuNuSwapInv:
      return "νν-swap⁻¹";
    case CongRule::kTrans:
      return "(" + format_cong(c[0]) + " ; " + format_cong(c[1]) + ")";
    case CongRule::kZero:
      return "refl";
    case CongRule::kInput:
      return "in " + std::to_string(phi.x()) + ". " + format_cong(c[0]);
    case CongRule::kOutput:
      return "out " + std::to_string(phi.x()) + " " + std::to_string(phi.y()) + ". " +
             format_cong(c[0]);
    case CongRule::kChoice:
      return "(" + format_cong(c[0]) + " + " + format_cong(c[1]) + ")";
    case CongRule::kPar:
      return "(" + format_cong(c[0]) + " | " + format_cong(c[1]) + ")";
    case CongRule::kRestrict:
      return "ν " + format_cong(c[0]);
    case CongRule::kReplicate:
      return "!" + format_cong(c[0]);
  }
  return "?";
}

}  // namespace pires
