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

#include "pires/generate.hpp"
#include "pires/serialize.hpp"
#include "pires/trace.hpp"

namespace pires {
namespace {

Process P(const char* s) { return parse_process(s); }

// Follows enumeration indices from p.
Trace walk(std::size_t ctx, const Process& p, std::vector<std::size_t> picks) {
  std::vector<Transition> steps;
  Context c{ctx};
  Process at = p;
  for (std::size_t k : picks) {
    auto ts = enumerate_transitions(c, at, 2);
    steps.push_back(ts.at(k));
    c = steps.back().target_ctx();
    at = steps.back().target();
  }
  return Trace(Context{ctx}, p, steps);
}

const char* kTwoInputs = "(in 0. 0) | (in 0. 0)";
const char* kChain = "(out 0 0. out 0 0. 0) | ((in 0. 0) | (in 0. 0))";

TEST(Traces, Validate) {
  Trace t = walk(1, P(kTwoInputs), {0, 0});
  EXPECT_TRUE(validate_trace(t));
  EXPECT_EQ(t.length(), 2u);
  EXPECT_EQ(t.target_ctx().size, 3u);
  EXPECT_EQ(t.target(), P("0 | 0"));
  EXPECT_TRUE(validate_actionseq(t.actions()));
  std::vector<Transition> broken{t.steps()[0], t.steps()[0]};
  Report r = validate_trace(Trace(Context{1}, P(kTwoInputs), broken));
  ASSERT_FALSE(r);
  EXPECT_EQ(r.path, "steps[1]");
}

Braiding swap_braiding() {
  auto ts = enumerate_transitions(Context{1}, P(kTwoInputs), 2);
  auto chi = decide_concurrent(ts[0], ts[1]);
  return *cofinality_witness(ts[0], ts[1], *chi, 1000).braiding;
}

TEST(Transport, EmptyTrace) {
  Braiding g = swap_braiding();
  auto [t, after] = residual_trace_braiding(Trace(g.ctx, g.source), g);
  EXPECT_EQ(t.length(), 0u);
  EXPECT_EQ(t.source(), g.target());
  EXPECT_EQ(to_json(after).dump(), to_json(g).dump());
}

TEST(Transport, IdentityBraiding) {
  Process p = P("(in 0. 0) | (out 0 0. 0)");
  Trace t = walk(1, p, {2});
  auto [moved, after] = residual_trace_braiding(t, identity_braiding(Context{1}, p));
  EXPECT_EQ(moved, t);
  EXPECT_TRUE(after.base().is_identity());
  EXPECT_EQ(after.phi.swap_steps(), 0u);
}

TEST(Transport, ThroughSwap) {
  Process p = P("(in 0. 0) | ((in 0. 0) | (in 0. in 0. out 0 1. 0))");
  auto ts = enumerate_transitions(Context{1}, p, 2);
  auto chi = decide_concurrent(ts[0], ts[1]);
  DiamondReport d = cofinality_witness(ts[0], ts[1], *chi, 1000);
  Braiding g = *d.braiding;
  ASSERT_EQ(g.delta, 2);
  Trace t = walk(g.ctx.size, g.source, {0, 0, 0});
  ASSERT_TRUE(validate_trace(t));
  auto [moved, after] = residual_trace_braiding(t, g);
  EXPECT_TRUE(validate_trace(moved));
  EXPECT_TRUE(validate_braiding(after));
  EXPECT_EQ(moved.source(), g.target());
  EXPECT_EQ(after.source, t.target());
  EXPECT_EQ(after.target(), moved.target());
  EXPECT_EQ(after.shift, 2u);
  EXPECT_EQ(moved.actions(), rename_actionseq(g.base(), t.actions()).first);
  EXPECT_THROW(residual_trace_braiding(walk(1, p, {}), g), NotCoinitial);
}

TEST(Transport, InverseRoundTripAndCoherence) {
  Rng rng(5);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    Context c{1 + rng.below(2)};
    Process p = random_process(rng, c, 12);
    auto ts = enumerate_transitions(c, p, 2);
    for (std::size_t a = 0; a < ts.size(); ++a)
      for (std::size_t b = a + 1; b < ts.size(); ++b) {
        auto chi = decide_concurrent(ts[a], ts[b]);
        if (!chi) continue;
        DiamondReport d = cofinality_witness(ts[a], ts[b], *chi, 100000);
        Braiding g = *d.braiding;
        Trace u = random_trace(rng, g.ctx, g.source, 3);
        auto [moved, after] = residual_trace_braiding(u, g);
        ASSERT_TRUE(validate_trace(moved));
        ASSERT_EQ(moved.actions(), rename_actionseq(g.base(), u.actions()).first);
        auto [back, _] = residual_trace_braiding(moved, inverse(g));
        ASSERT_EQ(back, u) << format_process(p);
        ++checked;
      }
  }
  EXPECT_GT(checked, 20);
}

TEST(Proofs, NilAndRefl) {
  Process p = P(kTwoInputs);
  Trace empty(Context{1}, p);
  EXPECT_TRUE(validate_causal_equiv(CausalEquivProof::nil(Context{1}, p), empty, empty));
  Trace t = walk(1, p, {0, 0});
  EXPECT_TRUE(validate_causal_equiv(CausalEquivProof::refl(t), t, t));
}

TEST(Proofs, TransposeTwoInputs) {
  Process p = P(kTwoInputs);
  auto ts = enumerate_transitions(Context{1}, p, 2);
  auto chi = decide_concurrent(ts[0], ts[1]);
  DiamondReport d = cofinality_witness(ts[0], ts[1], *chi, 1000);
  Trace t(Context{1}, p, {ts[0], d.f_after_e});
  Trace u(Context{1}, p, {ts[1], d.e_after_f});
  CausalEquivProof alpha = CausalEquivProof::transpose(
      ts[0], ts[1], chi, CausalEquivProof::nil(d.f_after_e.target_ctx(), d.f_after_e.target()));
  EXPECT_TRUE(validate_causal_equiv(alpha, t, u));
  EXPECT_EQ(d.braiding->base(), Renaming::swap(Context{1}));
  EXPECT_FALSE(validate_causal_equiv(alpha, u, t));
}

TEST(Proofs, MissingConcurrency) {
  Process p = P("(in 0. 0) | (out 0 0. 0)");
  auto ts = enumerate_transitions(Context{1}, p, 2);
  Trace t = walk(1, p, {0});
  CausalEquivProof alpha =
      CausalEquivProof::transpose(ts[0], ts[2], std::nullopt, CausalEquivProof::nil(Context{2}, ts[0].target()));
  Report r = validate_causal_equiv(alpha, t, t);
  ASSERT_FALSE(r);
  EXPECT_NE(r.message.find("no concurrency proof"), std::string::npos) << r.to_string();
}

TEST(Decide, Reflexive) {
  Trace t = walk(1, P(kChain), {0, 0});
  EquivSearch s = decide_causal_equiv(t, t, 10);
  ASSERT_EQ(s.status, SearchStatus::kFound);
  EXPECT_EQ(s.proof->rule(), EquivRule::kCons);
  EXPECT_TRUE(validate_causal_equiv(*s.proof, t, t));
}

TEST(Decide, TwoInterleavings) {
  Process p = P(kTwoInputs);
  Trace t = walk(1, p, {0, 0});
  Trace u = walk(1, p, {1, 0});
  EquivSearch s = decide_causal_equiv(t, u, 100);
  ASSERT_EQ(s.status, SearchStatus::kFound);
  EXPECT_TRUE(validate_causal_equiv(*s.proof, t, u));
  ASSERT_EQ(s.trail.size(), 1u);
  EXPECT_EQ(s.trail[0].delta, 2);
}

TEST(Decide, CausallyOrderedChainIsRejected) {
  Process p = P(kChain);
  auto first = enumerate_transitions(Context{1}, p, 2);
  // Pick the two rendezvous of the head output with each receiver.
  std::vector<std::size_t> taus;
  for (std::size_t i = 0; i < first.size(); ++i)
    if (first[i].action() == Action::tau()) taus.push_back(i);
  ASSERT_EQ(taus.size(), 2u);
  auto finish = [&](std::size_t k) {
    Trace one = walk(1, p, {k});
    auto next = enumerate_transitions(one.target_ctx(), one.target(), 2);
    for (std::size_t j = 0; j < next.size(); ++j)
      if (next[j].action() == Action::tau()) return walk(1, p, {k, j});
    return one;
  };
  Trace t = finish(taus[0]);
  Trace u = finish(taus[1]);
  ASSERT_EQ(t.length(), 2u);
  ASSERT_EQ(u.length(), 2u);
  EquivSearch s = decide_causal_equiv(t, u, 10000);
  EXPECT_EQ(s.status, SearchStatus::kNotFound);
  EXPECT_FALSE(s.proof);
}

TEST(Decide, DependentStepsDoNotCommute) {
  Process p = P("(in 0. out 0 0. 0) | (out 0 0. 0)");
  Trace t = walk(1, p, {0, 0});
  auto ts = enumerate_transitions(Context{1}, p, 2);
  EXPECT_FALSE(decide_concurrent(t.steps()[0], ts[2]));
  Trace u = walk(1, p, {1, 0});
  EXPECT_EQ(decide_causal_equiv(t, u, 10000).status, SearchStatus::kNotFound);
}

TEST(Decide, BudgetExceededIsDistinct) {
  Process p = P("(in 0. 0) | ((in 0. 0) | ((in 0. 0) | (in 0. 0)))");
  Trace t = walk(1, p, {0, 0, 0, 0});
  Trace u = walk(1, p, {3, 2, 1, 0});
  EXPECT_EQ(decide_causal_equiv(t, u, 2).status, SearchStatus::kBudgetExceeded);
  EquivSearch s = decide_causal_equiv(t, u, 10000);
  ASSERT_EQ(s.status, SearchStatus::kFound);
  EXPECT_TRUE(validate_causal_equiv(*s.proof, t, u));
}

TEST(Decide, LengthMismatchCompletes) {
  Process p = P(kTwoInputs);
  EXPECT_EQ(decide_causal_equiv(walk(1, p, {0}), walk(1, p, {0, 0}), 10).status,
            SearchStatus::kNotFound);
  EXPECT_THROW(decide_causal_equiv(walk(1, p, {}), Trace(Context{1}, P("0")), 10), NotCoinitial);
}

TEST(Transpositions, TwiceIsIdentity) {
  Rng rng(88);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    Context c{1 + rng.below(2)};
    Trace t = random_trace(rng, c, random_process(rng, c, 12), 4);
    for (const auto& m : transpositions(t, {})) {
      ASSERT_TRUE(validate_trace(m.result));
      ASSERT_TRUE(validate_causal_equiv(m.proof, t, m.result));
      bool back = false;
      for (const auto& n : transpositions(m.result, {}))
        if (n.position == m.position && n.result == t) back = true;
      ASSERT_TRUE(back);
      ++checked;
    }
  }
  EXPECT_GT(checked, 20);
}

TEST(Equivalence, ClassesAreSymmetricAndTransitive) {
  Rng rng(61);
  int classes = 0;
  for (int i = 0; i < 60; ++i) {
    Context c{1 + rng.below(2)};
    Trace t = random_trace(rng, c, random_process(rng, c, 14), 3);
    auto moves = transpositions(t, {});
    if (moves.empty()) continue;
    const Trace& u = moves[rng.below(moves.size())].result;
    auto more = transpositions(u, {});
    const Trace& v = more[rng.below(more.size())].result;
    EquivSearch tu = decide_causal_equiv(t, u, 10000);
    EquivSearch ut = decide_causal_equiv(u, t, 10000);
    EquivSearch uv = decide_causal_equiv(u, v, 10000);
    EquivSearch tv = decide_causal_equiv(t, v, 10000);
    ASSERT_EQ(tu.status, SearchStatus::kFound);
    ASSERT_EQ(ut.status, SearchStatus::kFound);
    ASSERT_EQ(uv.status, SearchStatus::kFound);
    ASSERT_EQ(tv.status, SearchStatus::kFound);
    ASSERT_TRUE(validate_causal_equiv(*ut.proof, u, t));
    CausalEquivProof chained = CausalEquivProof::trans(*tu.proof, *uv.proof);
    ASSERT_TRUE(validate_causal_equiv(chained, t, v));
    ++classes;
  }
  EXPECT_GT(classes, 5);
}

TEST(Json, TraceAndProofRoundTrip) {
  Process p = P(kTwoInputs);
  Trace t = walk(1, p, {0, 0});
  Trace u = walk(1, p, {1, 0});
  EXPECT_EQ(trace_from_json(Json::parse(to_json(t).dump())), t);
  EquivSearch s = decide_causal_equiv(t, u, 100);
  CausalEquivProof back = equiv_from_json(Json::parse(to_json(*s.proof).dump()));
  EXPECT_TRUE(validate_causal_equiv(back, t, u));
  EXPECT_EQ(to_json(back).dump(), to_json(*s.proof).dump());
}

}  // namespace
}  // namespace pires
