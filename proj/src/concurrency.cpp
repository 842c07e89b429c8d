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

#include "pires/concurrency.hpp"

#include <array>

namespace pires {

namespace {

constexpr std::array<const char*, 7> kConcurNames = {
    "parOpposite", "parLeft", "parRight", "parBoth", "choice", "restrict", "rep"};

enum Side { kLeft = 0, kRight = 1 };

bool touches(const Transition& t, Side s) {
  switch (t.rule()) {
    case Rule::kParL:
      return s == kLeft;
    case Rule::kParR:
      return s == kRight;
    default:
      return is_rendezvous(t.rule());
  }
}

// The premise of a parallel-composition transition acting on side s.
const Transition& side_premise(const Transition& t, Side s) {
  if (is_rendezvous(t.rule())) return t.premise(s == kLeft ? 0 : 1);
  return t.premise(0);
}

const ConcurProof& side_child(const ConcurProof& chi, Side s) {
  switch (chi.rule()) {
    case ConcurRule::kParLeft:
      if (s == kLeft) return chi.child(0);
      break;
    case ConcurRule::kParRight:
      if (s == kRight) return chi.child(0);
      break;
    case ConcurRule::kParBoth:
      return chi.child(s == kLeft ? 0 : 1);
    default:
      break;
  }
  throw ProofMismatch("concurrency proof has no sub-proof for that side");
}

bool pops(const Transition& t, Side s) {
  return (t.rule() == Rule::kParLTau && s == kLeft) ||
         (t.rule() == Rule::kParRTau && s == kRight);
}

bool extrudes(const Transition& t) {
  return t.rule() == Rule::kParLNu || t.rule() == Rule::kParRNu;
}

struct Expected {
  ConcurRule rule;
  std::vector<std::pair<Transition, Transition>> pairs;
};

// The rule shape for a coinitial pair, or nullopt if no rule applies.
std::optional<Expected> expected_shape(const Transition& e, const Transition& f) {
  switch (e.source().kind()) {
    case ProcessKind::kChoice:
      if (e.rule() != f.rule()) return std::nullopt;
      return Expected{ConcurRule::kChoice, {{e.premise(), f.premise()}}};
    case ProcessKind::kReplicate:
      return Expected{ConcurRule::kRep, {{e.premise(), f.premise()}}};
    case ProcessKind::kRestrict:
      return Expected{ConcurRule::kRestrict, {{e.premise(), f.premise()}}};
    case ProcessKind::kPar: {
      bool l = touches(e, kLeft) && touches(f, kLeft);
      bool r = touches(e, kRight) && touches(f, kRight);
      Expected x{ConcurRule::kParOpposite, {}};
      if (l) x.pairs.emplace_back(side_premise(e, kLeft), side_premise(f, kLeft));
      if (r) x.pairs.emplace_back(side_premise(e, kRight), side_premise(f, kRight));
      x.rule = l && r ? ConcurRule::kParBoth
               : l    ? ConcurRule::kParLeft
               : r    ? ConcurRule::kParRight
                      : ConcurRule::kParOpposite;
      return x;
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

const char* concur_rule_name(ConcurRule r) { return kConcurNames[static_cast<int>(r)]; }

ConcurProof ConcurProof::assemble(ConcurRule rule, Transition e, Transition f,
                                  std::vector<ConcurProof> children) {
  return ConcurProof(std::make_shared<Node>(
      Node{rule, std::move(e), std::move(f), std::move(children)}));
}

ConcurProof ConcurProof::make(const Transition& e, const Transition& f,
                              std::vector<ConcurProof> children) {
  if (e.ctx() != f.ctx() || e.source() != f.source())
    throw DerivationError("concurrency proof over non-coinitial transitions");
  auto x = expected_shape(e, f);
  if (!x) throw DerivationError("no concurrency rule for " + std::string(rule_name(e.rule())) +
                                " and " + rule_name(f.rule()));
  if (children.size() != x->pairs.size())
    throw DerivationError("wrong number of concurrency sub-proofs");
  for (std::size_t i = 0; i < children.size(); ++i)
    if (children[i].left() != x->pairs[i].first || children[i].right() != x->pairs[i].second)
      throw DerivationError("concurrency sub-proof relates the wrong transitions");
  return assemble(x->rule, e, f, std::move(children));
}

bool operator==(const ConcurProof& a, const ConcurProof& b) {
  if (a.node_ == b.node_) return true;
  return a.rule() == b.rule() && a.left() == b.left() && a.right() == b.right() &&
         a.children() == b.children();
}

Report validate_concur(const ConcurProof& chi) {
  for (std::size_t i = 0; i < chi.children().size(); ++i) {
    Report r = validate_concur(chi.children()[i]);
    if (!r) {
      r.path = std::string(concur_rule_name(chi.rule())) + "[" + std::to_string(i) + "]/" + r.path;
      return r;
    }
  }
  const char* here = concur_rule_name(chi.rule());
  const Transition& e = chi.left();
  const Transition& f = chi.right();
  if (chi.children().empty()) {
    // Leaves are the only place the transitions themselves get checked.
    Report r = validate_transition(e);
    if (!r) return Report::failure(here, "left transition invalid: " + r.to_string());
    r = validate_transition(f);
    if (!r) return Report::failure(here, "right transition invalid: " + r.to_string());
  } else {
    for (const Transition* t : {&e, &f}) {
      Transition::Parts p = t->parts();
      // Re-check this node only; premises are covered by the children.
      Report r = validate_transition(Transition::assemble(p));
      if (!r) return Report::failure(here, r.to_string());
    }
  }
  if (e.ctx() != f.ctx() || e.source() != f.source())
    return Report::failure(here, "transitions are not coinitial");
  auto x = expected_shape(e, f);
  if (!x) return Report::failure(here, "no concurrency rule applies");
  if (x->rule != chi.rule()) return Report::failure(here, "rule does not match the pair");
  if (x->rule == ConcurRule::kParOpposite &&
      !((e.rule() == Rule::kParL && f.rule() == Rule::kParR) ||
        (e.rule() == Rule::kParR && f.rule() == Rule::kParL)))
    return Report::failure(here, "opposite-side rule needs parL and parR");
  if (chi.children().size() != x->pairs.size())
    return Report::failure(here, "wrong number of sub-proofs");
  for (std::size_t i = 0; i < x->pairs.size(); ++i)
    if (chi.child(i).left() != x->pairs[i].first || chi.child(i).right() != x->pairs[i].second)
      return Report::failure(here, "sub-proof relates the wrong transitions");
  return Report::success();
}

ConcurProof flip(const ConcurProof& chi) {
  std::vector<ConcurProof> kids;
  for (const auto& c : chi.children()) kids.push_back(flip(c));
  return ConcurProof::assemble(chi.rule(), chi.right(), chi.left(), std::move(kids));
}

namespace {

std::optional<ConcurProof> dc(const Transition& e, const Transition& f) {
  auto x = expected_shape(e, f);
  if (!x) return std::nullopt;
  std::vector<ConcurProof> kids;
  for (const auto& [a, b] : x->pairs) {
    auto sub = dc(a, b);
    if (!sub) return std::nullopt;
    kids.push_back(std::move(*sub));
  }
  return ConcurProof::assemble(x->rule, e, f, std::move(kids));
}

}  // namespace

std::optional<ConcurProof> decide_concurrent(const Transition& e, const Transition& f) {
  if (e.ctx() != f.ctx() || e.source() != f.source())
    throw NotCoinitial("decide_concurrent: transitions are not coinitial");
  return dc(e, f);
}

// ---------------------------------------------------------------------------
// Residuals.

namespace {

struct ParResidual {
  Transition w;  // before the restriction added by an extrusion rendezvous
  bool wrap;
};

ParResidual par_residual(const ConcurProof& chi) {
  const Transition& e = chi.left();
  const Transition& f = chi.right();
  Context ctx = e.ctx();
  bool nu = extrudes(f);
  const Process& ft = nu ? f.target().body() : f.target();
  auto side = [&](Side s) -> Transition {
    if (touches(f, s)) {
      Transition t = residual(side_child(chi, s));
      if (pops(f, s)) t = rename_transition(t, Renaming::pop(ctx, f.y()));
      return t;
    }
    const Transition& es = side_premise(e, s);
    return f.action().is_bound() ? rename_transition(es, Renaming::push(ctx)) : es;
  };
  switch (e.rule()) {
    case Rule::kParL:
      return {Transition::par_l(side(kLeft), ft.right()), nu};
    case Rule::kParR:
      return {Transition::par_r(ft.left(), side(kRight)), nu};
    default:
      return {Transition::rendezvous(side(kLeft), side(kRight)), nu};
  }
}

}  // namespace

Transition residual(const ConcurProof& chi) {
  const Transition& f = chi.right();
  switch (chi.rule()) {
    case ConcurRule::kChoice:
    case ConcurRule::kRep:
      return residual(chi.child());
    case ConcurRule::kRestrict: {
      Transition inner = residual(chi.child());
      if (f.rule() == Rule::kRestrictOutput) return inner;
      if (f.action().is_bound()) inner = rename_transition(inner, Renaming::swap(f.ctx()));
      return Transition::restrict(inner);
    }
    default: {
      ParResidual p = par_residual(chi);
      return p.wrap ? Transition::restrict(p.w) : p.w;
    }
  }
}

Transition residual_transition(const Transition& e, const Transition& f,
                               const ConcurProof& chi) {
  if (chi.left() != e || chi.right() != f)
    throw ProofMismatch("residual_transition: proof does not relate the given transitions");
  return residual(chi);
}

int delta(const Transition& e, const Transition& f, const ConcurProof& chi) {
  if (chi.left() != e || chi.right() != f)
    throw ProofMismatch("delta: proof does not relate the given transitions");
  return (e.action().is_bound() ? 1 : 0) +
         (residual(flip(chi)).action().is_bound() ? 1 : 0);
}

DiamondReport cofinality_witness(const Transition& e, const Transition& f,
                                 const ConcurProof& chi, std::size_t cong_budget) {
  if (chi.left() != e || chi.right() != f)
    throw ProofMismatch("cofinality_witness: proof does not relate the given transitions");
  Transition ef = residual(chi);
  Transition fe = residual(flip(chi));
  int d = (e.action().is_bound() ? 1 : 0) + (fe.action().is_bound() ? 1 : 0);
  int d2 = (f.action().is_bound() ? 1 : 0) + (ef.action().is_bound() ? 1 : 0);
  if (d != d2) throw ProofMismatch("residuals introduce different numbers of names");
  DiamondReport out{e, f, chi, ef, fe, d, SearchStatus::kNotFound, 0, std::nullopt};
  Context ctx = fe.target_ctx();
  Braiding probe{ctx, fe.target(), d, 0, CongProof::refl(ctx, fe.target())};
  Process moved = apply(probe.base(), fe.target());
  CongSearch s = decide_cong(ctx, moved, ef.target(), cong_budget);
  out.status = s.status;
  out.explored = s.explored;
  if (s.proof) out.braiding = Braiding{ctx, fe.target(), d, 0, *s.proof};
  return out;
}

Report verify_pentagon(const DiamondReport& d) {
  Report r = validate_transition(d.e_after_f);
  if (!r) return Report::failure("E/E'", r.to_string());
  r = validate_transition(d.f_after_e);
  if (!r) return Report::failure("E'/E", r.to_string());
  if (d.e_after_f.source() != d.f.target() || d.e_after_f.ctx() != d.f.target_ctx())
    return Report::failure("E/E'", "does not start where E' ends");
  if (d.f_after_e.source() != d.e.target() || d.f_after_e.ctx() != d.e.target_ctx())
    return Report::failure("E'/E", "does not start where E ends");
  int bound = (d.e.action().is_bound() ? 1 : 0) + (d.f_after_e.action().is_bound() ? 1 : 0);
  if (d.delta != bound) return Report::failure("delta", "does not count the bound actions");
  if (d.status == SearchStatus::kBudgetExceeded)
    return Report::failure("braiding", "congruence search budget exceeded");
  if (!d.braiding) return Report::failure("braiding", "targets are not congruent");
  const Braiding& g = *d.braiding;
  r = validate_braiding(g);
  if (!r) return r;
  if (g.delta != d.delta) return Report::failure("braiding", "selector differs from delta");
  if (g.source != d.f_after_e.target() || g.ctx != d.f_after_e.target_ctx())
    return Report::failure("braiding", "source is not the target of E then E'/E");
  if (g.target() != d.e_after_f.target() || d.e_after_f.target_ctx() != g.ctx)
    return Report::failure("braiding", "target is not the target of E' then E/E'");
  return Report::success();
}

// ---------------------------------------------------------------------------
// Preservation under renaming and residuation.

ConcurProof residual_concur_after_renaming(const ConcurProof& chi, const Renaming& rho) {
  if (rho.dom() != chi.left().ctx())
    throw SizeMismatch("residual_concur_after_renaming: renaming domain does not match");
  Renaming inner = chi.rule() == ConcurRule::kRestrict ? lift(rho) : rho;
  std::vector<ConcurProof> kids;
  for (const auto& c : chi.children()) kids.push_back(residual_concur_after_renaming(c, inner));
  return ConcurProof::make(rename_transition(chi.left(), rho),
                           rename_transition(chi.right(), rho), std::move(kids));
}

namespace {

ConcurProof concur_after(const ConcurProof& chi, const ConcurProof& a, const ConcurProof& b) {
  const Transition& x = chi.left();
  const Transition& y = chi.right();
  const Transition& z = a.right();
  if (a.left() != x || b.left() != y || b.right() != z)
    throw ProofMismatch("residual_concur_after_transition: proofs do not share transitions");
  Context ctx = x.ctx();
  Transition xr = residual(a);
  Transition yr = residual(b);
  switch (chi.rule()) {
    case ConcurRule::kChoice:
    case ConcurRule::kRep:
      return concur_after(chi.child(), a.child(), b.child());
    case ConcurRule::kRestrict: {
      ConcurProof inner = concur_after(chi.child(), a.child(), b.child());
      if (z.rule() == Rule::kRestrictOutput) return inner;
      if (z.action().is_bound())
        inner = residual_concur_after_renaming(inner, Renaming::swap(ctx));
      return ConcurProof::make(xr, yr, {inner});
    }
    default:
      break;
  }
  std::vector<ConcurProof> kids;
  for (Side s : {kLeft, kRight}) {
    if (!(touches(x, s) && touches(y, s))) continue;
    const ConcurProof& cs = side_child(chi, s);
    if (touches(z, s)) {
      ConcurProof t = concur_after(cs, side_child(a, s), side_child(b, s));
      if (pops(z, s)) t = residual_concur_after_renaming(t, Renaming::pop(ctx, z.y()));
      kids.push_back(t);
    } else {
      kids.push_back(z.action().is_bound()
                         ? residual_concur_after_renaming(cs, Renaming::push(ctx))
                         : cs);
    }
  }
  if (!extrudes(z)) return ConcurProof::make(xr, yr, std::move(kids));
  ConcurProof inner = ConcurProof::make(par_residual(a).w, par_residual(b).w, std::move(kids));
  return ConcurProof::make(xr, yr, {inner});
}

}  // namespace

ConcurProof residual_concur_after_transition(const ConcurProof& chi, const Transition& e2,
                                             const ConcurProof& chi_a,
                                             const ConcurProof& chi_b) {
  if (chi_a.right() != e2)
    throw ProofMismatch("residual_concur_after_transition: third transition does not match");
  return concur_after(chi, chi_a, chi_b);
}

CubeReport check_cube(const ConcurProof& chi01, const ConcurProof& chi12,
                      const ConcurProof& chi20, std::size_t cong_budget) {
  const Transition& e0 = chi01.left();
  const Transition& e1 = chi01.right();
  const Transition& e2 = chi12.right();
  if (chi12.left() != e1 || chi20.left() != e2 || chi20.right() != e0)
    throw ProofMismatch("check_cube: proofs do not form a triangle");
  CubeReport out;
  // (E'/E'')/(E/E''), then moved along the braiding gamma(E'', E).
  ConcurProof lhs_proof = concur_after(flip(chi01), chi12, flip(chi20));
  Transition lhs_pre = residual(lhs_proof);
  DiamondReport d = cofinality_witness(e2, e0, chi20, cong_budget);
  out.status = d.status;
  if (!d.braiding) return out;
  out.lhs = residual_braiding_transition(lhs_pre, *d.braiding).first;
  // (E'/E)/(E''/E).
  ConcurProof rhs_proof = concur_after(chi12, flip(chi01), chi20);
  out.rhs = residual(rhs_proof);
  out.equal = *out.lhs == *out.rhs;
  return out;
}

std::string format_concur(const ConcurProof& chi) {
  std::string s = std::string(concur_rule_name(chi.rule())) + "<" +
                  rule_name(chi.left().rule()) + "," + rule_name(chi.right().rule()) + ">";
  if (chi.children().empty()) return s;
  s += "(";
  for (std::size_t i = 0; i < chi.children().size(); ++i)
    s += (i ? ", " : "") + format_concur(chi.children()[i]);
  return s + ")";
}

}  // namespace pires
