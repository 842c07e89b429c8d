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

#include <gtest/gtest.h>

#include <set>

#include "oracle.hpp"
#include "pires/generate.hpp"
#include "pires/semantics.hpp"
#include "pires/serialize.hpp"

namespace pires {
namespace {

Process P(const char* s) { return parse_process(s); }

std::vector<Transition> steps(std::size_t ctx, const char* s, std::size_t budget = 2) {
  return enumerate_transitions(Context{ctx}, P(s), budget);
}

TEST(Enumerate, TwoParallelInputs) {
  auto ts = steps(1, "(in 0. 0) | (in 0. 0)");
  ASSERT_EQ(ts.size(), 2u);
  EXPECT_EQ(ts[0].rule(), Rule::kParL);
  EXPECT_EQ(ts[0].action(), Action::input(0));
  EXPECT_EQ(ts[0].target(), P("0 | (in 1. 0)"));
  EXPECT_EQ(ts[1].rule(), Rule::kParR);
  EXPECT_EQ(ts[1].target(), P("(in 1. 0) | 0"));
}

TEST(Enumerate, InputOutputRendezvous) {
  auto ts = steps(1, "(in 0. 0) | (out 0 0. 0)");
  ASSERT_EQ(ts.size(), 3u);
  EXPECT_EQ(ts[2].rule(), Rule::kParLTau);
  EXPECT_EQ(ts[2].action(), Action::tau());
  EXPECT_EQ(ts[2].target(), P("0 | 0"));
}

TEST(Enumerate, ZeroHasNoTransitions) {
  for (std::size_t b = 0; b < 4; ++b) EXPECT_TRUE(steps(0, "0", b).empty());
}

TEST(Enumerate, SameBinderExtrusion) {
  auto ts = steps(1, "new (out 1 0. 0 | out 1 0. 0)");
  ASSERT_EQ(ts.size(), 2u);
  for (const auto& t : ts) {
    EXPECT_EQ(t.rule(), Rule::kRestrictOutput);
    EXPECT_EQ(format_action(t.action()), "0̄(ν)");
  }
}

TEST(Enumerate, ReplicationBudget) {
  EXPECT_TRUE(steps(1, "!in 0. 0", 0).empty());
  // One unfolding: the left copy only; two: also the left copy of the
  // nested unfolding.
  EXPECT_EQ(steps(1, "!in 0. 0", 1).size(), 1u);
  EXPECT_EQ(steps(1, "!in 0. 0", 2).size(), 2u);
  for (const auto& t : steps(1, "!(in 0. 0 | out 0 0. 0)", 2))
    EXPECT_LE(rep_depth(t), 2u);
}

TEST(Enumerate, RejectsOpenProcess) {
  EXPECT_THROW(steps(0, "in 0. 0"), ScopeError);
}

TEST(Enumerate, SoundAndDeterministic) {
  Rng rng(21);
  for (int i = 0; i < 1500; ++i) {
    Context c{rng.below(4)};
    Process p = random_process(rng, c, 14);
    auto ts = enumerate_transitions(c, p, 2);
    for (const auto& t : ts) {
      Report r = validate_transition(t);
      ASSERT_TRUE(r) << format_process(p) << ": " << r.to_string();
      ASSERT_EQ(t.source(), p);
      ASSERT_EQ(t.ctx(), c);
      ASSERT_TRUE(check_scope(t.target_ctx(), t.target()));
    }
    ASSERT_EQ(ts, enumerate_transitions(c, p, 2));
  }
}

TEST(Enumerate, CompleteAgainstOracle) {
  for (std::size_t g = 0; g <= 2; ++g)
    for (const Process& p : all_processes(Context{g}, 6))
      for (std::size_t b = 0; b <= 2; ++b) {
        auto want = oracle::derivations(Context{g}, p, b);
        for (const auto& t : want) ASSERT_TRUE(validate_transition(t)) << format_derivation(t);
        ASSERT_EQ(oracle::canonical(enumerate_transitions(Context{g}, p, b)),
                  oracle::canonical(want))
            << format_process(p) << " budget " << b;
      }
}

// The same transition with the two sides of the top-level parallel
// exchanged.
std::optional<Transition> mirror(const Transition& e) {
  const Process& s = e.source();
  switch (e.rule()) {
    case Rule::kParL:
      return Transition::par_r(s.right(), e.premise());
    case Rule::kParR:
      return Transition::par_l(e.premise(), s.left());
    case Rule::kParLTau:
    case Rule::kParRTau:
    case Rule::kParLNu:
    case Rule::kParRNu:
      return Transition::rendezvous(e.premise(1), e.premise(0));
    default:
      return std::nullopt;
  }
}

TEST(Enumerate, MirrorSymmetry) {
  Rng rng(4);
  for (int i = 0; i < 1000; ++i) {
    Context c{1 + rng.below(3)};
    Process l = random_process(rng, c, 7);
    Process r = random_process(rng, c, 7);
    auto lr = enumerate_transitions(c, Process::par(l, r), 2);
    auto rl = enumerate_transitions(c, Process::par(r, l), 2);
    ASSERT_EQ(lr.size(), rl.size());
    std::set<std::string> want;
    for (const auto& t : rl) want.insert(to_json(t).dump());
    for (const auto& t : lr) {
      auto m = mirror(t);
      ASSERT_TRUE(m);
      ASSERT_TRUE(want.count(to_json(*m).dump())) << format_derivation(t);
      static const std::map<Rule, Rule> swapped{
          {Rule::kParL, Rule::kParR},       {Rule::kParR, Rule::kParL},
          {Rule::kParLTau, Rule::kParRTau}, {Rule::kParRTau, Rule::kParLTau},
          {Rule::kParLNu, Rule::kParRNu},   {Rule::kParRNu, Rule::kParLNu}};
      ASSERT_EQ(m->rule(), swapped.at(t.rule()));
    }
  }
}

TEST(Validate, InputPrefix) {
  Transition e = Transition::prefix(Context{6}, P("in 5. 0"));
  EXPECT_TRUE(validate_transition(e));
  EXPECT_EQ(e.action(), Action::input(5));
  EXPECT_EQ(e.target_ctx().size, 7u);
  EXPECT_EQ(e.target(), Process::zero());
}

TEST(Validate, RollUpExtrusionThroughSecondBinder) {
  // E : P --(z+2)<0>--> R with z = 0, under two binders.
  Process p = P("out 2 0. in 1. 0");
  Transition e = Transition::prefix(Context{3}, p);
  Transition ro = Transition::restrict_output(e);
  Transition ra = Transition::restrict_a(ro);
  EXPECT_TRUE(validate_transition(ra));
  EXPECT_EQ(ra.rule(), Rule::kRestrictA);
  EXPECT_EQ(ra.action(), Action::bound_output(0));
  EXPECT_EQ(ra.target(), Process::restrict(apply(Renaming::swap(Context{1}), e.target())));
}

TEST(Validate, ChannelMismatch) {
  Transition in = Transition::prefix(Context{2}, P("in 0. 0"));
  Transition out = Transition::prefix(Context{2}, P("out 1 0. 0"));
  Transition bad = Transition::assemble({Rule::kParLTau, Context{2}, Action::tau(),
                                         Process::par(in.source(), out.source()),
                                         Process::par(Process::zero(), Process::zero()), 0,
                                         {in, out}});
  Report r = validate_transition(bad);
  ASSERT_FALSE(r);
  EXPECT_NE(r.message.find("channel mismatch"), std::string::npos) << r.to_string();
  EXPECT_THROW(Transition::par_l_tau(in, out), DerivationError);
}

TEST(Validate, DetectsCorruptedCaches) {
  auto ts = steps(1, "new ((in 0. 0) | (out 1 0. 0)) | (in 0. out 0 0. 0)");
  ASSERT_FALSE(ts.empty());
  for (const auto& t : ts) {
    auto parts = t.parts();
    parts.target = Process::par(parts.target, Process::zero());
    EXPECT_FALSE(validate_transition(Transition::assemble(parts)));
    parts = t.parts();
    parts.action = Action::output(0, 0) == parts.action ? Action::tau() : Action::output(0, 0);
    EXPECT_FALSE(validate_transition(Transition::assemble(parts)));
  }
}

TEST(Validate, PushOnPassiveSideOnlyWhenBound) {
  Transition e = Transition::prefix(Context{1}, P("out 0 0. 0"));
  auto parts = Transition::par_l(e, P("in 0. 0")).parts();
  parts.target = Process::par(Process::zero(), P("in 1. 0"));
  EXPECT_FALSE(validate_transition(Transition::assemble(parts)));
}

TEST(Rename, InputPrefixUnderPush) {
  Transition e = Transition::prefix(Context{1}, P("in 0. 0"));
  Transition r = rename_transition(e, Renaming::push(Context{1}));
  EXPECT_EQ(r, Transition::prefix(Context{2}, P("in 1. 0")));
  EXPECT_EQ(rename_transition(e, Renaming::identity(Context{1})), e);
  EXPECT_THROW(rename_transition(e, Renaming::identity(Context{2})), SizeMismatch);
}

TEST(Rename, RendezvousUnderSwap) {
  auto ts = steps(2, "(in 0. 0) | (out 0 1. 0)");
  const Transition& tau = ts.back();
  ASSERT_EQ(tau.rule(), Rule::kParLTau);
  Renaming s = Renaming::swap(Context{0});
  Transition r = rename_transition(tau, s);
  EXPECT_TRUE(validate_transition(r));
  EXPECT_EQ(r.source(), apply(s, tau.source()));
  EXPECT_EQ(r.target(), apply(s, tau.target()));
  EXPECT_EQ(r.y(), 0u);
}

TEST(Rename, SurvivesRenamingSquare) {
  Rng rng(8);
  for (int i = 0; i < 400; ++i) {
    Context c{1 + rng.below(3)};
    Process p = random_process(rng, c, 12);
    for (const auto& e : enumerate_transitions(c, p, 2)) {
      Renaming rho = random_renaming(rng, c, Context{1 + rng.below(4)});
      Transition r = rename_transition(e, rho);
      ASSERT_TRUE(validate_transition(r)) << format_derivation(e) << " " << describe(rho);
      ASSERT_EQ(r.source(), apply(rho, e.source()));
      ASSERT_EQ(r.action(), apply(rho, e.action()));
      ASSERT_EQ(r.target(), apply(residual_after_action(rho, e.action()), e.target()));
    }
  }
}

TEST(Format, CompactNotation) {
  auto ts = steps(1, "(in 0. 0) | (out 0 0. 0)");
  EXPECT_EQ(format_derivation(ts[0]), "((in 0. 0) |[0?] (out 0 0. 0))");
  EXPECT_EQ(format_derivation(ts[2]), "((in 0. 0) |[τ 0] (out 0 0. 0))");
  auto ex = steps(1, "new (out 1 0. 0 | out 1 0. 0)");
  EXPECT_EQ(format_derivation(ex[0]), "ν°((out 1 0. 0) |[1̄⟨0⟩] (out 1 0. 0))");
}

TEST(Json, TransitionRoundTrip) {
  Rng rng(12);
  for (int i = 0; i < 500; ++i) {
    Context c{1 + rng.below(3)};
    Process p = random_process(rng, c, 12);
    for (const auto& e : enumerate_transitions(c, p, 2)) {
      Json j = to_json(e);
      Transition back = transition_from_json(Json::parse(j.dump()));
      ASSERT_EQ(back, e);
      ASSERT_EQ(to_json(back).dump(), j.dump());
    }
  }
}

TEST(Rules, NamesRoundTrip) {
  for (Rule r : {Rule::kInput, Rule::kOutput, Rule::kChoiceL, Rule::kChoiceR, Rule::kParL,
                 Rule::kParR, Rule::kParLTau, Rule::kParRTau, Rule::kParLNu, Rule::kParRNu,
                 Rule::kRestrictOutput, Rule::kRestrictA, Rule::kRep}) {
    Rule back;
    ASSERT_TRUE(rule_from_name(rule_name(r), &back));
    EXPECT_EQ(back, r);
  }
  EXPECT_STREQ(rule_name(Rule::kRestrictOutput), "restrictOut");
}

}  // namespace
}  // namespace pires
