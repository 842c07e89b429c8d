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

#include <cstdio>
#include <fstream>
#include <sstream>

#include "pires/cli.hpp"
#include "pires/serialize.hpp"

namespace pires {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& stdin_text = "",
        std::optional<std::string> env = std::nullopt) {
  args.insert(args.begin(), "pires");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err, env);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& part) {
  return s.find(part) != std::string::npos;
}

TEST(Steps, ListsTransitions) {
  Outcome r = run({"steps", "-e", "ctx 1; (in 0. 0) | (out 0 0. 0)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "3 transitions"));
  EXPECT_TRUE(contains(r.out, "--τ--> 0 | 0"));
}

TEST(Steps, NoTransitions) {
  Outcome r = run({"steps"}, "ctx 0; 0");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "no transitions\n");
}

TEST(Steps, BoundOutputLabel) {
  Outcome r = run({"steps", "-e", "ctx 1; new(out 1 0.0 | out 1 0.0)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "--0̄(ν)-->"));
}

TEST(Steps, JsonAgreesWithTextAndRoundTrips) {
  const std::string q = "ctx 1; !(in 0. 0 | out 0 0. 0) | new out 1 0. 0";
  Outcome text = run({"steps", "-e", q});
  Outcome js = run({"--json", "steps", "-e", q});
  ASSERT_EQ(js.code, 0);
  Json j = Json::parse(js.out);
  std::size_t n = j["count"];
  EXPECT_TRUE(contains(text.out, std::to_string(n) + " transitions"));
  auto want = enumerate_transitions(Context{1}, parse_process(q.substr(7)), 2);
  ASSERT_EQ(want.size(), n);
  for (std::size_t i = 0; i < n; ++i)
    EXPECT_EQ(transition_from_json(j["transitions"][i]["transition"]), want[i]);
}

TEST(Steps, UnfoldFlagAndEnvironment) {
  const std::string q = "ctx 1; !in 0. 0";
  EXPECT_EQ(Json::parse(run({"--json", "--unfold", "1", "steps", "-e", q}).out)["count"], 1);
  EXPECT_EQ(Json::parse(run({"--json", "steps", "-e", q}, "", "unfold=3").out)["count"], 3);
  EXPECT_EQ(Json::parse(run({"--json", "--unfold", "1", "steps", "-e", q}, "", "unfold=3").out)["count"],
            1);
  EXPECT_EQ(run({"steps", "-e", q}, "", "unfold=x").code, kExitInput);
  EXPECT_EQ(run({"steps", "-e", q}, "", "depth=2").code, kExitInput);
  EXPECT_EQ(run({"--unfold", "0", "steps", "-e", q}).code, kExitInput);
}

TEST(Input, Errors) {
  Outcome bad = run({"parse", "-e", "ctx 1; in 0 0"});
  EXPECT_EQ(bad.code, kExitInput);
  EXPECT_TRUE(contains(bad.err, "1:13"));
  EXPECT_EQ(run({"parse", "-e", "ctx 1; out 2 0. 0"}).code, kExitInput);
  EXPECT_EQ(run({"parse", "-e", "in 0. 0"}).code, kExitInput);
  EXPECT_EQ(run({"parse", "/nonexistent/file"}).code, kExitInput);
  EXPECT_EQ(run({"frobnicate"}).code, kExitInput);
  EXPECT_EQ(run({}).code, kExitInput);
  Outcome multi = run({"parse"}, "ctx 1;\n  in 0.\n  out 0");
  EXPECT_EQ(multi.code, kExitInput);
  EXPECT_TRUE(contains(multi.err, "3:")) << multi.err;
}

TEST(Input, ContextFlag) {
  Outcome r = run({"--ctx", "2", "parse", "-e", "out 1 0. 0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "ctx 2; out 1 0. 0"));
  EXPECT_EQ(run({"--ctx", "3", "parse", "-e", "ctx 2; 0"}).code, kExitInput);
}

TEST(Input, File) {
  std::string path = ::testing::TempDir() + "pires_cli_input.txt";
  std::ofstream(path) << "ctx 1;\n(in 0. 0) | (in 0. 0)\n";
  Outcome r = run({"diamond", path});
  std::remove(path.c_str());
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "1 concurrent pair"));
}

TEST(Diamond, TwoInputs) {
  Outcome r = run({"diamond", "-e", "ctx 1; (in 0. 0) | (in 0. 0)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "delta=2, braid=swap"));
  EXPECT_TRUE(contains(r.out, "1 concurrent pair, 1 verified"));
  Json j = Json::parse(run({"--json", "diamond", "-e", "ctx 1; (in 0. 0) | (in 0. 0)"}).out);
  EXPECT_EQ(j["concurrent_pairs"], 1);
  EXPECT_EQ(j["pairs"][0]["braid"], "swap");
}

TEST(Diamond, ChoiceAndSharedPremise) {
  Outcome c = run({"diamond", "-e", "ctx 1; in 0. 0 + in 0. 0"});
  EXPECT_EQ(c.code, 0);
  EXPECT_TRUE(contains(c.out, "0 concurrent pairs"));
  Outcome t = run({"diamond", "-e", "ctx 1; (in 0. 0) | (out 0 0. 0)"});
  EXPECT_TRUE(contains(t.out, "[0,2] not concurrent"));
  EXPECT_TRUE(contains(t.out, "[1,2] not concurrent"));
}

TEST(Diamond, NeedsSwapCongruence) {
  Outcome r = run({"diamond", "-e",
               "ctx 1; ((in 0. out 0 0. 0) | (in 0. 0)) | ((new out 1 0. 0) | (new out 1 0. 0))"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "phi=") && contains(r.out, "νν-swap"));
}

TEST(Cube, ThreeInputs) {
  Outcome r = run({"cube", "-e", "ctx 1; (in 0. 0) | ((in 0. 0) | (in 0. 0))"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "1 concurrent triple, 0 failed"));
}

TEST(Cong, Outcomes) {
  Outcome r = run({"cong", "-e", "ctx 0; new new out 0 1. 0; new new out 1 0. 0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "congruent: νν-swap"));
  Outcome no = run({"cong", "-e", "ctx 1; 0; in 0. 0"});
  EXPECT_EQ(no.code, 0);
  EXPECT_TRUE(contains(no.out, "not congruent"));
  const std::string hard =
      "ctx 0; new new new new (out 0 1. out 2 3. 0 | new new out 0 1. 0);"
      " new new new new (out 0 1. out 2 3. 0 | new new out 0 0. 0)";
  EXPECT_EQ(run({"--cong-budget", "3", "cong", "-e", hard}).code, kExitBudget);
  EXPECT_EQ(run({"cong", "-e", hard}, "", "cong=3").code, kExitBudget);
  EXPECT_EQ(run({"cong", "-e", "ctx 0; 0"}).code, kExitInput);
}

TEST(TraceEq, Interleavings) {
  Outcome r = run({"trace-eq", "-e", "ctx 1; (in 0. 0) | (in 0. 0); t = 0 0; u = 1 0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "equivalent (1 transposition)"));
  EXPECT_TRUE(contains(r.out, "base=swap"));
  Outcome same = run({"trace-eq", "-e", "ctx 1; (in 0. 0) | (in 0. 0); t = 0 0; u = 0 0"});
  EXPECT_EQ(same.code, 0);
  EXPECT_TRUE(contains(same.out, "equivalent (0 transpositions)"));
}

TEST(TraceEq, CausalChainNotEquivalent) {
  // Head output meets receiver 1 then receiver 2, against the reverse.
  const std::string q = "ctx 1; (out 0 0. out 0 0. 0) | ((in 0. 0) | (in 0. 0));";
  Json steps0 = Json::parse(run({"--json", "steps", "-e", q}).out);
  std::vector<int> taus;
  for (const auto& t : steps0["transitions"])
    if (t["label"] == "τ") taus.push_back(t["index"]);
  ASSERT_EQ(taus.size(), 2u);
  // After either rendezvous, the only remaining tau is the second one.
  auto tau_after = [&](int k) {
    Json s = Json::parse(
        run({"--json", "trace-eq", "-e", q + " t = " + std::to_string(k) + "; u = " + std::to_string(k)})
            .out);
    Trace one = trace_from_json(s["t"]);
    auto next = enumerate_transitions(one.target_ctx(), one.target(), 2);
    for (std::size_t j = 0; j < next.size(); ++j)
      if (next[j].action() == Action::tau()) return j;
    return next.size();
  };
  std::string t = std::to_string(taus[0]) + " " + std::to_string(tau_after(taus[0]));
  std::string u = std::to_string(taus[1]) + " " + std::to_string(tau_after(taus[1]));
  Outcome r = run({"trace-eq", "-e", q + " t = " + t + "; u = " + u});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "not equivalent"));
  Json j = Json::parse(run({"--json", "trace-eq", "-e", q + " t = " + t + "; u = " + u}).out);
  EXPECT_EQ(j["status"], "not-found");
  EXPECT_EQ(j["equivalent"], false);
}

TEST(TraceEq, BudgetAndErrors) {
  const std::string q =
      "ctx 1; (in 0. 0) | ((in 0. 0) | ((in 0. 0) | (in 0. 0))); t = 0 0 0 0; u = 3 2 1 0";
  EXPECT_EQ(run({"--trace-budget", "2", "trace-eq", "-e", q}).code, kExitBudget);
  EXPECT_EQ(run({"trace-eq", "-e", q}, "", "trace=2").code, kExitBudget);
  EXPECT_EQ(run({"trace-eq", "-e", q}).code, 0);
  EXPECT_EQ(run({"trace-eq", "-e", "ctx 1; in 0. 0; t = 5; u = 0"}).code, kExitInput);
  EXPECT_EQ(run({"trace-eq", "-e", "ctx 1; in 0. 0; t = 0"}).code, kExitInput);
  EXPECT_EQ(run({"trace-eq", "-e", "ctx 1; in 0. 0; v = 0"}).code, kExitInput);
}

TEST(TraceEq, JsonInput) {
  Json j = Json::parse(
      run({"--json", "trace-eq", "-e", "ctx 1; (in 0. 0) | (in 0. 0); t = 0 0; u = 1 0"}).out);
  EXPECT_EQ(j["status"], "found");
  ASSERT_EQ(j["trail"].size(), 1u);
  Json pair{{"t", j["t"]}, {"u", j["u"]}};
  Outcome r = run({"trace-eq"}, pair.dump());
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "equivalent (1 transposition)"));
  EXPECT_EQ(run({"trace-eq"}, "{\"t\": 1}").code, kExitInput);
}

TEST(Random, SeededAndWellScoped) {
  Outcome a = run({"--seed", "9", "--ctx", "2", "random", "--size", "10", "--count", "50"});
  Outcome b = run({"--seed", "9", "--ctx", "2", "random", "--size", "10", "--count", "50"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  std::istringstream lines(a.out);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    EXPECT_EQ(run({"parse", "-e", line}).code, 0) << line;
    ++n;
  }
  EXPECT_EQ(n, 50);
  EXPECT_NE(run({"--seed", "10", "--ctx", "2", "random", "--size", "10", "--count", "50"}).out, a.out);
}

TEST(Lemmas, AllHold) {
  Outcome r = run({"lemmas"});
  EXPECT_EQ(r.code, 0);
  EXPECT_FALSE(contains(r.out, "FAIL"));
  Json j = Json::parse(run({"--json", "lemmas"}).out);
  EXPECT_EQ(j.size(), 8u);
}

TEST(Help, ExitsZero) {
  Outcome r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "trace-eq"));
}

}  // namespace
}  // namespace pires
