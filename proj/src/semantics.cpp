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

#include "pires/semantics.hpp"

#include <array>

namespace pires {

namespace {

constexpr std::array<const char*, 13> kRuleNames = {
    "input", "output", "choiceL", "choiceR", "parL", "parR", "parLTau",
    "parRTau", "parLNu", "parRNu", "restrictOut", "restrictA", "rep"};

}  // namespace

const char* rule_name(Rule r) { return kRuleNames[static_cast<int>(r)]; }

bool rule_from_name(const std::string& s, Rule* out) {
  for (std::size_t i = 0; i < kRuleNames.size(); ++i) {
    if (s == kRuleNames[i]) {
      *out = static_cast<Rule>(i);
      return true;
    }
  }
  return false;
}

bool is_rendezvous(Rule r) {
  return r == Rule::kParLTau || r == Rule::kParRTau || r == Rule::kParLNu ||
         r == Rule::kParRNu;
}

bool unpush(const Action& a, Action* out) {
  switch (a.kind) {
    case ActionKind::kTau:
      *out = a;
      return true;
    case ActionKind::kOutput:
      if (a.channel == 0 || a.payload == 0) return false;
      *out = Action::output(a.channel - 1, a.payload - 1);
      return true;
    case ActionKind::kInput:
    case ActionKind::kBoundOutput:
      if (a.channel == 0) return false;
      *out = a;
      out->channel = a.channel - 1;
      return true;
  }
  return false;
}

namespace {

std::size_t action_hash(const Action& a) {
  std::size_t h = static_cast<std::size_t>(a.kind) + 17;
  if (a.has_channel()) h = hash_combine(h, a.channel);
  if (a.kind == ActionKind::kOutput) h = hash_combine(h, a.payload);
  return h;
}

bool is_extrusion_premise(const Action& a) {
  return a.kind == ActionKind::kOutput && a.channel >= 1 && a.payload == 0;
}

Report fail(const Transition::Parts& t, const std::string& msg) {
  return Report::failure(rule_name(t.rule), msg);
}

// Checks one node's side-conditions, assuming its premises are valid.
Report check_node(const Transition::Parts& t) {
  Report r = check_scope(t.ctx, t.source);
  if (!r) return fail(t, "source not closed by context: " + r.to_string());
  Context tctx;
  r = check_action_scope(t.ctx, t.action, &tctx);
  if (!r) return fail(t, "action not scoped: " + r.to_string());
  r = check_scope(tctx, t.target);
  if (!r) return fail(t, "target not closed by target context: " + r.to_string());

  std::size_t want = 0;
  switch (t.rule) {
    case Rule::kInput:
    case Rule::kOutput:
      want = 0;
      break;
    case Rule::kParLTau:
    case Rule::kParRTau:
    case Rule::kParLNu:
    case Rule::kParRNu:
      want = 2;
      break;
    default:
      want = 1;
  }
  if (t.premises.size() != want)
    return fail(t, "expected " + std::to_string(want) + " premises");
  for (const Transition& p : t.premises) {
    Context expect = t.ctx;
    if (t.rule == Rule::kRestrictOutput || t.rule == Rule::kRestrictA)
      expect = t.ctx.extend();
    if (p.ctx() != expect) return fail(t, "premise context mismatch");
  }
  const Process& s = t.source;

  switch (t.rule) {
    case Rule::kInput:
      if (s.kind() != ProcessKind::kInput) return fail(t, "source is not an input prefix");
      if (t.action != Action::input(s.channel())) return fail(t, "action does not match prefix");
      if (t.target != s.body()) return fail(t, "target is not the prefix body");
      return Report::success();
    case Rule::kOutput:
      if (s.kind() != ProcessKind::kOutput) return fail(t, "source is not an output prefix");
      if (t.action != Action::output(s.channel(), s.payload()))
        return fail(t, "action does not match prefix");
      if (t.target != s.body()) return fail(t, "target is not the prefix body");
      return Report::success();
    case Rule::kChoiceL:
    case Rule::kChoiceR: {
      if (s.kind() != ProcessKind::kChoice) return fail(t, "source is not a choice");
      const Transition& e = t.premises[0];
      const Process& side = t.rule == Rule::kChoiceL ? s.left() : s.right();
      if (e.source() != side) return fail(t, "premise source is not the chosen branch");
      if (t.action != e.action()) return fail(t, "action differs from premise");
      if (t.target != e.target()) return fail(t, "target differs from premise");
      return Report::success();
    }
    case Rule::kParL:
    case Rule::kParR: {
      if (s.kind() != ProcessKind::kPar) return fail(t, "source is not a parallel composition");
      const Transition& e = t.premises[0];
      bool left = t.rule == Rule::kParL;
      const Process& active = left ? s.left() : s.right();
      const Process& passive = left ? s.right() : s.left();
      if (e.source() != active) return fail(t, "premise source is not the active component");
      if (t.action != e.action()) return fail(t, "action differs from premise");
      Process moved = t.action.is_bound() ? apply(Renaming::push(t.ctx), passive) : passive;
      Process want_target = left ? Process::par(e.target(), moved)
                                 : Process::par(moved, e.target());
      if (t.target != want_target) return fail(t, "target mismatch");
      return Report::success();
    }
    case Rule::kParLTau:
    case Rule::kParRTau:
    case Rule::kParLNu:
    case Rule::kParRNu: {
      if (s.kind() != ProcessKind::kPar) return fail(t, "source is not a parallel composition");
      const Transition& e = t.premises[0];
      const Transition& f = t.premises[1];
      if (e.source() != s.left() || f.source() != s.right())
        return fail(t, "premise sources do not match components");
      bool recv_left = t.rule == Rule::kParLTau || t.rule == Rule::kParLNu;
      const Transition& recv = recv_left ? e : f;
      const Transition& send = recv_left ? f : e;
      bool nu = t.rule == Rule::kParLNu || t.rule == Rule::kParRNu;
      if (recv.action().kind != ActionKind::kInput)
        return fail(t, "receiver premise is not an input");
      ActionKind sk = nu ? ActionKind::kBoundOutput : ActionKind::kOutput;
      if (send.action().kind != sk)
        return fail(t, nu ? "sender premise is not a bound output"
                          : "sender premise is not an output");
      if (recv.action().channel != send.action().channel)
        return fail(t, "channel mismatch");
      if (t.action != Action::tau()) return fail(t, "action is not tau");
      Process want_target;
      if (nu) {
        if (t.y != 0) return fail(t, "unexpected payload on extrusion rendezvous");
        want_target = Process::restrict(Process::par(e.target(), f.target()));
      } else {
        if (t.y != send.action().payload) return fail(t, "payload mismatch");
        Process r = apply(Renaming::pop(t.ctx, t.y), recv.target());
        want_target = recv_left ? Process::par(r, f.target())
                                : Process::par(e.target(), r);
      }
      if (t.target != want_target) return fail(t, "target mismatch");
      return Report::success();
    }
    case Rule::kRestrictOutput: {
      if (s.kind() != ProcessKind::kRestrict) return fail(t, "source is not a restriction");
      const Transition& e = t.premises[0];
      if (e.source() != s.body()) return fail(t, "premise source is not the restriction body");
      if (!is_extrusion_premise(e.action()))
        return fail(t, "premise action is not out (x+1) 0");
      if (t.action != Action::bound_output(e.action().channel - 1))
        return fail(t, "action is not the extruding bound output");
      if (t.target != e.target()) return fail(t, "target differs from premise");
      return Report::success();
    }
    case Rule::kRestrictA: {
      if (s.kind() != ProcessKind::kRestrict) return fail(t, "source is not a restriction");
      const Transition& e = t.premises[0];
      if (e.source() != s.body()) return fail(t, "premise source is not the restriction body");
      if (e.action() != apply(Renaming::push(t.ctx), t.action))
        return fail(t, "premise action is not the pushed action");
      Process inner = t.action.is_bound() ? apply(Renaming::swap(t.ctx), e.target())
                                          : e.target();
      if (t.target != Process::restrict(inner)) return fail(t, "target mismatch");
      return Report::success();
    }
    case Rule::kRep: {
      if (s.kind() != ProcessKind::kReplicate) return fail(t, "source is not a replication");
      const Transition& e = t.premises[0];
      if (e.source() != Process::par(s.body(), s))
        return fail(t, "premise source is not the one-step unfolding");
      if (t.action != e.action()) return fail(t, "action differs from premise");
      if (t.target != e.target()) return fail(t, "target differs from premise");
      return Report::success();
    }
  }
  return fail(t, "unknown rule");
}

Report validate_rec(const Transition& e, const std::string& path) {
  std::string here = path.empty() ? rule_name(e.rule())
                                  : path + "/" + rule_name(e.rule());
  for (std::size_t i = 0; i < e.premises().size(); ++i) {
    Report r = validate_rec(e.premises()[i], here + "[" + std::to_string(i) + "]");
    if (!r) return r;
  }
  Report r = check_node(e.parts());
  if (!r) r.path = here;
  return r;
}

}  // namespace

Transition Transition::assemble(Parts parts) {
  auto n = std::make_shared<Node>();
  std::size_t h = hash_combine(static_cast<std::size_t>(parts.rule) + 101,
                               parts.ctx.size);
  h = hash_combine(h, action_hash(parts.action));
  h = hash_combine(h, parts.source.hash());
  h = hash_combine(h, parts.target.hash());
  h = hash_combine(h, parts.y);
  for (const Transition& p : parts.premises) h = hash_combine(h, p.hash());
  n->hash = h;
  n->parts = std::move(parts);
  return Transition(std::move(n));
}

Transition Transition::checked(Parts parts) {
  Report r = check_node(parts);
  if (!r) throw DerivationError(r.to_string());
  return assemble(std::move(parts));
}

bool operator==(const Transition& a, const Transition& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash()) return false;
  const auto& x = a.parts();
  const auto& y = b.parts();
  return x.rule == y.rule && x.ctx == y.ctx && x.action == y.action &&
         x.y == y.y && x.source == y.source && x.target == y.target &&
         x.premises == y.premises;
}

Transition Transition::prefix(Context ctx, const Process& p) {
  Parts t;
  t.ctx = ctx;
  t.source = p;
  if (p.kind() == ProcessKind::kInput) {
    t.rule = Rule::kInput;
    t.action = Action::input(p.channel());
  } else if (p.kind() == ProcessKind::kOutput) {
    t.rule = Rule::kOutput;
    t.action = Action::output(p.channel(), p.payload());
  } else {
    throw DerivationError("prefix: source is not a prefix");
  }
  t.target = p.body();
  return checked(std::move(t));
}

Transition Transition::choice_l(const Transition& e, const Process& q) {
  return checked({Rule::kChoiceL, e.ctx(), e.action(),
                  Process::choice(e.source(), q), e.target(), 0, {e}});
}

Transition Transition::choice_r(const Process& p, const Transition& f) {
  return checked({Rule::kChoiceR, f.ctx(), f.action(),
                  Process::choice(p, f.source()), f.target(), 0, {f}});
}

Transition Transition::par_l(const Transition& e, const Process& q) {
  Process moved = e.action().is_bound() ? apply(Renaming::push(e.ctx()), q) : q;
  return checked({Rule::kParL, e.ctx(), e.action(), Process::par(e.source(), q),
                  Process::par(e.target(), moved), 0, {e}});
}

Transition Transition::par_r(const Process& p, const Transition& f) {
  Process moved = f.action().is_bound() ? apply(Renaming::push(f.ctx()), p) : p;
  return checked({Rule::kParR, f.ctx(), f.action(), Process::par(p, f.source()),
                  Process::par(moved, f.target()), 0, {f}});
}

namespace {

void require_rendezvous(const Transition& recv, const Transition& send,
                        ActionKind send_kind) {
  if (recv.ctx() != send.ctx())
    throw DerivationError("rendezvous premises in different contexts");
  if (recv.action().kind != ActionKind::kInput ||
      send.action().kind != send_kind)
    throw DerivationError("rendezvous premises have the wrong action kinds");
  if (recv.action().channel != send.action().channel)
    throw DerivationError("channel mismatch");
}

}  // namespace

Transition Transition::par_l_tau(const Transition& e, const Transition& f) {
  require_rendezvous(e, f, ActionKind::kOutput);
  Name y = f.action().payload;
  Process r = apply(Renaming::pop(e.ctx(), y), e.target());
  return checked({Rule::kParLTau, e.ctx(), Action::tau(),
                  Process::par(e.source(), f.source()),
                  Process::par(r, f.target()), y, {e, f}});
}

Transition Transition::par_r_tau(const Transition& e, const Transition& f) {
  require_rendezvous(f, e, ActionKind::kOutput);
  Name y = e.action().payload;
  Process r = apply(Renaming::pop(f.ctx(), y), f.target());
  return checked({Rule::kParRTau, e.ctx(), Action::tau(),
                  Process::par(e.source(), f.source()),
                  Process::par(e.target(), r), y, {e, f}});
}

Transition Transition::par_l_nu(const Transition& e, const Transition& f) {
  require_rendezvous(e, f, ActionKind::kBoundOutput);
  return checked({Rule::kParLNu, e.ctx(), Action::tau(),
                  Process::par(e.source(), f.source()),
                  Process::restrict(Process::par(e.target(), f.target())), 0,
                  {e, f}});
}

Transition Transition::par_r_nu(const Transition& e, const Transition& f) {
  require_rendezvous(f, e, ActionKind::kBoundOutput);
  return checked({Rule::kParRNu, e.ctx(), Action::tau(),
                  Process::par(e.source(), f.source()),
                  Process::restrict(Process::par(e.target(), f.target())), 0,
                  {e, f}});
}

Transition Transition::rendezvous(const Transition& e, const Transition& f) {
  ActionKind a = e.action().kind;
  ActionKind b = f.action().kind;
  if (a == ActionKind::kInput && b == ActionKind::kOutput) return par_l_tau(e, f);
  if (a == ActionKind::kOutput && b == ActionKind::kInput) return par_r_tau(e, f);
  if (a == ActionKind::kInput && b == ActionKind::kBoundOutput) return par_l_nu(e, f);
  if (a == ActionKind::kBoundOutput && b == ActionKind::kInput) return par_r_nu(e, f);
  throw DerivationError("rendezvous: premise actions cannot synchronise");
}

Transition Transition::restrict_output(const Transition& e) {
  if (!is_extrusion_premise(e.action()) || e.ctx().size == 0)
    throw DerivationError("restrictOut: premise action is not out (x+1) 0");
  return checked({Rule::kRestrictOutput, Context{e.ctx().size - 1},
                  Action::bound_output(e.action().channel - 1),
                  Process::restrict(e.source()), e.target(), 0, {e}});
}

Transition Transition::restrict_a(const Transition& e) {
  Action a;
  if (e.ctx().size == 0 || !unpush(e.action(), &a))
    throw DerivationError("restrictA: premise action mentions the bound name");
  Context ctx{e.ctx().size - 1};
  Process inner = a.is_bound() ? apply(Renaming::swap(ctx), e.target()) : e.target();
  return checked({Rule::kRestrictA, ctx, a, Process::restrict(e.source()),
                  Process::restrict(inner), 0, {e}});
}

Transition Transition::restrict(const Transition& e) {
  if (is_extrusion_premise(e.action())) return restrict_output(e);
  return restrict_a(e);
}

Transition Transition::rep(const Transition& e) {
  const Process& s = e.source();
  if (s.kind() != ProcessKind::kPar ||
      s.right().kind() != ProcessKind::kReplicate || s.right().body() != s.left())
    throw DerivationError("rep: premise source is not P | !P");
  return checked({Rule::kRep, e.ctx(), e.action(), s.right(), e.target(), 0, {e}});
}

Report validate_transition(const Transition& e) { return validate_rec(e, ""); }

namespace {

void enumerate_rec(Context ctx, const Process& p, std::size_t budget,
                   std::vector<Transition>& out) {
  switch (p.kind()) {
    case ProcessKind::kZero:
      return;
    case ProcessKind::kInput:
    case ProcessKind::kOutput:
      out.push_back(Transition::prefix(ctx, p));
      return;
    case ProcessKind::kChoice: {
      std::vector<Transition> l, r;
      enumerate_rec(ctx, p.left(), budget, l);
      enumerate_rec(ctx, p.right(), budget, r);
      for (const auto& e : l) out.push_back(Transition::choice_l(e, p.right()));
      for (const auto& f : r) out.push_back(Transition::choice_r(p.left(), f));
      return;
    }
    case ProcessKind::kPar: {
      std::vector<Transition> l, r;
      enumerate_rec(ctx, p.left(), budget, l);
      enumerate_rec(ctx, p.right(), budget, r);
      for (const auto& e : l) out.push_back(Transition::par_l(e, p.right()));
      for (const auto& f : r) out.push_back(Transition::par_r(p.left(), f));
      auto pairs = [&](ActionKind lk, ActionKind rk, auto make) {
        for (const auto& e : l) {
          if (e.action().kind != lk) continue;
          for (const auto& f : r)
            if (f.action().kind == rk && f.action().channel == e.action().channel)
              out.push_back(make(e, f));
        }
      };
      pairs(ActionKind::kInput, ActionKind::kOutput, Transition::par_l_tau);
      pairs(ActionKind::kOutput, ActionKind::kInput, Transition::par_r_tau);
      pairs(ActionKind::kInput, ActionKind::kBoundOutput, Transition::par_l_nu);
      pairs(ActionKind::kBoundOutput, ActionKind::kInput, Transition::par_r_nu);
      return;
    }
    case ProcessKind::kRestrict: {
      std::vector<Transition> b;
      enumerate_rec(ctx.extend(), p.body(), budget, b);
      for (const auto& e : b)
        if (is_extrusion_premise(e.action()))
          out.push_back(Transition::restrict_output(e));
      Action a;
      for (const auto& e : b)
        if (unpush(e.action(), &a)) out.push_back(Transition::restrict_a(e));
      return;
    }
    case ProcessKind::kReplicate: {
      if (budget == 0) return;
      std::vector<Transition> b;
      enumerate_rec(ctx, Process::par(p.body(), p), budget - 1, b);
      for (const auto& e : b) out.push_back(Transition::rep(e));
      return;
    }
  }
}

}  // namespace

std::vector<Transition> enumerate_transitions(Context ctx, const Process& p,
                                              std::size_t unfold_budget) {
  Report r = check_scope(ctx, p);
  if (!r) throw ScopeError("enumerate_transitions: " + r.to_string());
  std::vector<Transition> out;
  enumerate_rec(ctx, p, unfold_budget, out);
  return out;
}

Transition rename_transition(const Transition& e, const Renaming& rho) {
  if (rho.dom() != e.ctx())
    throw SizeMismatch("rename_transition: renaming domain size " +
                       std::to_string(rho.dom().size) +
                       " differs from transition context size " +
                       std::to_string(e.ctx().size));
  const Process& s = e.source();
  switch (e.rule()) {
    case Rule::kInput:
    case Rule::kOutput:
      return Transition::prefix(rho.cod(), apply(rho, s));
    case Rule::kChoiceL:
      return Transition::choice_l(rename_transition(e.premise(), rho),
                                  apply(rho, s.right()));
    case Rule::kChoiceR:
      return Transition::choice_r(apply(rho, s.left()),
                                  rename_transition(e.premise(), rho));
    case Rule::kParL:
      return Transition::par_l(rename_transition(e.premise(), rho),
                               apply(rho, s.right()));
    case Rule::kParR:
      return Transition::par_r(apply(rho, s.left()),
                               rename_transition(e.premise(), rho));
    case Rule::kParLTau:
      return Transition::par_l_tau(rename_transition(e.premise(0), rho),
                                   rename_transition(e.premise(1), rho));
    case Rule::kParRTau:
      return Transition::par_r_tau(rename_transition(e.premise(0), rho),
                                   rename_transition(e.premise(1), rho));
    case Rule::kParLNu:
      return Transition::par_l_nu(rename_transition(e.premise(0), rho),
                                  rename_transition(e.premise(1), rho));
    case Rule::kParRNu:
      return Transition::par_r_nu(rename_transition(e.premise(0), rho),
                                  rename_transition(e.premise(1), rho));
    case Rule::kRestrictOutput:
      return Transition::restrict_output(rename_transition(e.premise(), lift(rho)));
    case Rule::kRestrictA:
      return Transition::restrict_a(rename_transition(e.premise(), lift(rho)));
    case Rule::kRep:
      return Transition::rep(rename_transition(e.premise(), rho));
  }
  throw DerivationError("rename_transition: unknown rule");
}

std::size_t rep_depth(const Transition& e) {
  std::size_t d = 0;
  for (const auto& p : e.premises()) d = std::max(d, rep_depth(p));
  return d + (e.rule() == Rule::kRep ? 1 : 0);
}

std::string format_derivation(const Transition& e) {
  const Process& s = e.source();
  auto sub = [&](std::size_t i) { return format_derivation(e.premise(i)); };
  auto proc = [](const Process& p) {
    if (p.kind() == ProcessKind::kZero) return std::string("0");
    return "(" + format_process(p) + ")";
  };
  std::string a = format_action(e.action());
  switch (e.rule()) {
    case Rule::kInput:
    case Rule::kOutput:
      return proc(s);
    case Rule::kChoiceL:
      return "(" + sub(0) + " + " + proc(s.right()) + ")";
    case Rule::kChoiceR:
      return "(" + proc(s.left()) + " + " + sub(0) + ")";
    case Rule::kParL:
      return "(" + sub(0) + " |[" + a + "] " + proc(s.right()) + ")";
    case Rule::kParR:
      return "(" + proc(s.left()) + " [" + a + "]| " + sub(0) + ")";
    case Rule::kParLTau:
      return "(" + sub(0) + " |[τ " + std::to_string(e.y()) + "] " + sub(1) + ")";
    case Rule::kParRTau:
      return "(" + sub(0) + " [τ " + std::to_string(e.y()) + "]| " + sub(1) + ")";
    case Rule::kParLNu:
      return "(" + sub(0) + " |[ν] " + sub(1) + ")";
    case Rule::kParRNu:
      return "(" + sub(0) + " [ν]| " + sub(1) + ")";
    case Rule::kRestrictOutput:
      return "ν°" + sub(0);
    case Rule::kRestrictA:
      return "ν[" + a + "]" + sub(0);
    case Rule::kRep:
      return "!" + sub(0);
  }
  return "?";
}

}  // namespace pires
