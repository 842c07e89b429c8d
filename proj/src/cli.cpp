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

#include "pires/cli.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pires/concurrency.hpp"
#include "pires/generate.hpp"
#include "pires/lemmas.hpp"
#include "pires/semantics.hpp"
#include "pires/serialize.hpp"
#include "pires/trace.hpp"

namespace pires {

namespace {

// Non-zero exit with a message already formatted for the user.
struct Exit {
  int code;
  std::string message;
};

std::size_t parse_count(const std::string& s, const std::string& what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw Error(what + ": expected a natural number, found '" + s + "'");
  return std::stoull(s);
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

}  // namespace

void apply_budget_spec(const std::string& spec, RunConfig& cfg) {
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error("budget spec: expected key=value, found '" + item + "'");
    std::string key = trim(item.substr(0, eq));
    std::size_t v = parse_count(trim(item.substr(eq + 1)), "budget " + key);
    if (key == "unfold")
      cfg.unfold_budget = v;
    else if (key == "cong")
      cfg.cong_budget = v;
    else if (key == "trace")
      cfg.trace_budget = v;
    else
      throw Error("budget spec: unknown key '" + key + "'");
  }
}

Query split_query(const std::string& text, std::optional<std::size_t> ctx_flag) {
  std::size_t i = 0, line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (; n > 0 && i < text.size(); --n, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) advance(1);
  };
  auto found = [&]() -> std::string {
    if (i >= text.size()) return "end of input";
    return "'" + std::string(1, text[i]) + "'";
  };
  Query q;
  skip_ws();
  if (text.compare(i, 3, "ctx") == 0) {
    advance(3);
    skip_ws();
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) {
      i = start;
      throw ParseError(line, col, "context size", found());
    }
    std::size_t n = std::stoull(text.substr(start, i - start));
    col += i - start;
    skip_ws();
    if (i >= text.size() || text[i] != ';') throw ParseError(line, col, "';'", found());
    advance(1);
    if (ctx_flag && *ctx_flag != n)
      throw ParseError(line, 1, "ctx " + std::to_string(*ctx_flag) + " as given by --ctx",
                       "ctx " + std::to_string(n));
    q.ctx = Context{n};
  } else if (ctx_flag) {
    q.ctx = Context{*ctx_flag};
  } else {
    throw ParseError(line, col, "'ctx N;' header", found());
  }
  while (true) {
    std::size_t end = text.find(';', i);
    std::string seg = text.substr(i, end == std::string::npos ? std::string::npos : end - i);
    q.segments.push_back(seg);
    q.positions.emplace_back(line, col);
    if (end == std::string::npos) break;
    advance(end - i + 1);
  }
  // A trailing ';' leaves an empty final segment.
  if (q.segments.size() > 1 && trim(q.segments.back()).empty()) {
    q.segments.pop_back();
    q.positions.pop_back();
  }
  return q;
}

namespace {

class Driver {
 public:
  Driver(RunConfig cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  Process process_at(const Query& q, std::size_t k) const {
    if (k >= q.segments.size()) throw Exit{kExitInput, "missing process in segment " + std::to_string(k + 1)};
    Process p = parse_process(q.segments[k], q.positions[k].first, q.positions[k].second);
    Report r = check_scope(q.ctx, p);
    if (!r) throw ScopeError("scope error: " + r.to_string());
    return p;
  }

  int parse(const Query& q) {
    Process p = process_at(q, 0);
    if (cfg_.json) {
      out_ << Json{{"ctx", q.ctx.size}, {"process", format_process(p)}, {"size", p.size()},
                   {"ast", to_json(p)}}
                  .dump(2)
           << "\n";
    } else {
      out_ << "ctx " << q.ctx.size << "; " << p << "\n";
      out_ << "size " << p.size() << "\n";
    }
    return kExitOk;
  }

  int steps(const Query& q) {
    Process p = process_at(q, 0);
    auto ts = enumerate_transitions(q.ctx, p, cfg_.unfold_budget);
    if (cfg_.json) {
      Json list = Json::array();
      for (std::size_t i = 0; i < ts.size(); ++i)
        list.push_back({{"index", i},
                        {"derivation", format_derivation(ts[i])},
                        {"label", format_action(ts[i].action())},
                        {"target", format_process(ts[i].target())},
                        {"transition", to_json(ts[i])}});
      out_ << Json{{"ctx", q.ctx.size}, {"process", format_process(p)}, {"count", ts.size()},
                   {"transitions", list}}
                  .dump(2)
           << "\n";
      return kExitOk;
    }
    if (ts.empty()) {
      out_ << "no transitions\n";
      return kExitOk;
    }
    for (std::size_t i = 0; i < ts.size(); ++i)
      out_ << "[" << i << "] " << format_derivation(ts[i]) << "\n    --" << format_action(ts[i].action())
           << "--> " << ts[i].target() << "\n";
    out_ << ts.size() << " transition" << (ts.size() == 1 ? "" : "s") << "\n";
    return kExitOk;
  }

  int diamond(const Query& q) {
    Process p = process_at(q, 0);
    auto ts = enumerate_transitions(q.ctx, p, cfg_.unfold_budget);
    Json pairs = Json::array();
    std::size_t concurrent = 0, verified = 0, failed = 0, budget = 0;
    for (std::size_t i = 0; i < ts.size(); ++i)
      for (std::size_t j = i + 1; j < ts.size(); ++j) {
        auto chi = decide_concurrent(ts[i], ts[j]);
        std::string head = "[" + std::to_string(i) + "," + std::to_string(j) + "] ";
        if (!chi) {
          if (cfg_.json)
            pairs.push_back({{"i", i}, {"j", j}, {"concurrent", false}});
          else
            out_ << head << "not concurrent\n";
          continue;
        }
        ++concurrent;
        DiamondReport d = cofinality_witness(ts[i], ts[j], *chi, cfg_.cong_budget);
        Report r = d.status == SearchStatus::kFound ? verify_pentagon(d)
                                                    : Report::failure("pentagon", to_string(d.status));
        if (d.status == SearchStatus::kBudgetExceeded) ++budget;
        if (r)
          ++verified;
        else
          ++failed;
        if (cfg_.json) {
          Json j_ = to_json(d);
          j_["i"] = i;
          j_["j"] = j;
          j_["concurrent"] = true;
          j_["verified"] = static_cast<bool>(r);
          if (!r) j_["failure"] = r.to_string();
          pairs.push_back(j_);
        } else {
          out_ << head << "concurrent " << concur_rule_name(chi->rule()) << ", delta=" << d.delta
               << ", braid=" << (d.braiding && d.braiding->delta == 2 ? "swap" : "id");
          if (d.braiding) out_ << ", phi=" << format_cong(d.braiding->phi);
          out_ << ", " << (r ? "verified" : "FAILED: " + r.to_string()) << "\n";
        }
      }
    if (cfg_.json) {
      out_ << Json{{"ctx", q.ctx.size}, {"process", format_process(p)}, {"transitions", ts.size()},
                   {"concurrent_pairs", concurrent}, {"verified", verified}, {"failed", failed},
                   {"budget_exceeded", budget}, {"pairs", pairs}}
                  .dump(2)
           << "\n";
    } else {
      out_ << ts.size() << " transitions, " << concurrent << " concurrent pair"
           << (concurrent == 1 ? "" : "s") << ", " << verified << " verified\n";
    }
    return failed == 0 ? kExitOk : kExitProperty;
  }

  int cube(const Query& q) {
    Process p = process_at(q, 0);
    auto ts = enumerate_transitions(q.ctx, p, cfg_.unfold_budget);
    Json triples = Json::array();
    std::size_t count = 0, failed = 0;
    for (std::size_t i = 0; i < ts.size(); ++i)
      for (std::size_t j = i + 1; j < ts.size(); ++j) {
        auto c01 = decide_concurrent(ts[i], ts[j]);
        if (!c01) continue;
        for (std::size_t k = j + 1; k < ts.size(); ++k) {
          auto c12 = decide_concurrent(ts[j], ts[k]);
          auto c20 = decide_concurrent(ts[k], ts[i]);
          if (!c12 || !c20) continue;
          ++count;
          std::string problem;
          CubeReport cr;
          try {
            ConcurProof moved = residual_concur_after_transition(*c01, ts[k], flip(*c20), *c12);
            Report r = validate_concur(moved);
            if (!r) problem = "residual concurrency invalid: " + r.to_string();
            cr = check_cube(*c01, *c12, *c20, cfg_.cong_budget);
            if (problem.empty() && !cr.equal)
              problem = std::string("cube not equal (") + to_string(cr.status) + ")";
          } catch (const Error& e) {
            problem = e.what();
          }
          if (!problem.empty()) ++failed;
          if (cfg_.json) {
            Json t{{"i", i}, {"j", j}, {"k", k}, {"equal", problem.empty()}};
            if (cr.lhs) t["lhs"] = to_json(*cr.lhs);
            if (cr.rhs) t["rhs"] = to_json(*cr.rhs);
            if (!problem.empty()) t["failure"] = problem;
            triples.push_back(t);
          } else {
            out_ << "[" << i << "," << j << "," << k << "] "
                 << (problem.empty() ? "cube commutes" : "FAILED: " + problem) << "\n";
          }
        }
      }
    if (cfg_.json)
      out_ << Json{{"triples", count}, {"failed", failed}, {"results", triples}}.dump(2) << "\n";
    else
      out_ << count << " concurrent triple" << (count == 1 ? "" : "s") << ", " << failed << " failed\n";
    return failed == 0 ? kExitOk : kExitProperty;
  }

  int cong(const Query& q) {
    Process p = process_at(q, 0);
    Process r = process_at(q, 1);
    CongSearch s = decide_cong(q.ctx, p, r, cfg_.cong_budget);
    if (cfg_.json) {
      Json j{{"status", to_string(s.status)}, {"explored", s.explored}};
      if (s.proof) j["proof"] = to_json(*s.proof);
      out_ << j.dump(2) << "\n";
    } else {
      switch (s.status) {
        case SearchStatus::kFound:
          out_ << "congruent: " << format_cong(*s.proof) << "\n";
          break;
        case SearchStatus::kNotFound:
          out_ << "not congruent\n";
          break;
        case SearchStatus::kBudgetExceeded:
          out_ << "budget exceeded\n";
          break;
      }
      out_ << "explored " << s.explored << " states\n";
    }
    return s.status == SearchStatus::kBudgetExceeded ? kExitBudget : kExitOk;
  }

  // Follows a list of enumeration indices from the query's process.
  Trace script_trace(Context ctx, const Process& p, const std::string& script,
                     const std::string& name) const {
    std::stringstream ss(script);
    std::string tok;
    std::vector<Transition> steps;
    Context c = ctx;
    Process at = p;
    while (ss >> tok) {
      std::size_t k = parse_count(tok, "trace " + name);
      auto ts = enumerate_transitions(c, at, cfg_.unfold_budget);
      if (k >= ts.size())
        throw Exit{kExitInput, "trace " + name + ": step " + std::to_string(steps.size()) +
                                   " has no transition " + std::to_string(k) + " (only " +
                                   std::to_string(ts.size()) + ")"};
      steps.push_back(ts[k]);
      c = ts[k].target_ctx();
      at = ts[k].target();
    }
    return Trace(ctx, p, std::move(steps));
  }

  std::pair<Trace, Trace> read_traces(const std::string& text, std::optional<std::size_t> ctx_flag) {
    std::string body = trim(text);
    if (!body.empty() && body.front() == '{') {
      Json j;
      try {
        j = Json::parse(body);
        return {trace_from_json(j.at("t")), trace_from_json(j.at("u"))};
      } catch (const Json::exception& e) {
        throw Exit{kExitInput, std::string("invalid trace JSON: ") + e.what()};
      } catch (const Error& e) {
        throw Exit{kExitInput, std::string("invalid trace JSON: ") + e.what()};
      }
    }
    Query q = split_query(text, ctx_flag);
    Process p = process_at(q, 0);
    std::optional<std::string> t, u;
    for (std::size_t k = 1; k < q.segments.size(); ++k) {
      std::string seg = trim(q.segments[k]);
      auto eq = seg.find('=');
      std::string key = eq == std::string::npos ? "" : trim(seg.substr(0, eq));
      if (key == "t")
        t = seg.substr(eq + 1);
      else if (key == "u")
        u = seg.substr(eq + 1);
      else
        throw ParseError(q.positions[k].first, q.positions[k].second, "'t = ...' or 'u = ...'",
                         "'" + seg + "'");
    }
    if (!t || !u) throw Exit{kExitInput, "trace-eq needs both 't = ...' and 'u = ...'"};
    return {script_trace(q.ctx, p, *t, "t"), script_trace(q.ctx, p, *u, "u")};
  }

  int trace_eq(const std::string& text, std::optional<std::size_t> ctx_flag) {
    auto [t, u] = read_traces(text, ctx_flag);
    for (const auto& [name, tr] : {std::pair<const char*, const Trace*>{"t", &t}, {"u", &u}}) {
      Report r = validate_trace(*tr);
      if (!r) throw Exit{kExitInput, std::string("invalid trace ") + name + ": " + r.to_string()};
    }
    if (t.ctx() != u.ctx() || t.source() != u.source())
      throw Exit{kExitInput, "traces are not coinitial"};
    TraceSearchConfig tc{cfg_.unfold_budget, cfg_.cong_budget};
    EquivSearch s = decide_causal_equiv(t, u, cfg_.trace_budget, tc);
    std::string check;
    if (s.proof) {
      Report r = validate_causal_equiv(*s.proof, t, u, cfg_.cong_budget);
      if (!r) check = r.to_string();
    }
    if (cfg_.json) {
      Json j{{"status", to_string(s.status)}, {"explored", s.explored}, {"t", to_json(t)},
             {"u", to_json(u)}};
      j["equivalent"] = s.status == SearchStatus::kFound;
      if (s.proof) j["proof"] = to_json(*s.proof);
      Json trail = Json::array();
      for (const auto& g : s.trail) trail.push_back(to_json(g));
      j["trail"] = trail;
      if (!check.empty()) j["failure"] = check;
      out_ << j.dump(2) << "\n";
    } else {
      switch (s.status) {
        case SearchStatus::kFound:
          out_ << "equivalent (" << s.trail.size() << " transposition" << (s.trail.size() == 1 ? "" : "s")
               << ")\n";
          for (std::size_t i = 0; i < s.trail.size(); ++i)
            out_ << "  braiding " << i << ": base=" << (s.trail[i].delta == 2 ? "swap" : "id")
                 << " phi=" << format_cong(s.trail[i].phi) << "\n";
          break;
        case SearchStatus::kNotFound:
          out_ << "not equivalent\n";
          break;
        case SearchStatus::kBudgetExceeded:
          out_ << "budget exceeded\n";
          break;
      }
      out_ << "explored " << s.explored << " traces\n";
      if (!check.empty()) out_ << "proof check FAILED: " << check << "\n";
    }
    if (!check.empty()) return kExitProperty;
    return s.status == SearchStatus::kBudgetExceeded ? kExitBudget : kExitOk;
  }

  int random(std::size_t ctx, std::size_t size, std::size_t count) {
    Rng rng(cfg_.seed);
    Json list = Json::array();
    for (std::size_t i = 0; i < count; ++i) {
      Process p = random_process(rng, Context{ctx}, size);
      if (cfg_.json)
        list.push_back({{"ctx", ctx}, {"process", format_process(p)}, {"ast", to_json(p)}});
      else
        out_ << "ctx " << ctx << "; " << p << "\n";
    }
    if (cfg_.json) out_ << list.dump(2) << "\n";
    return kExitOk;
  }

  int lemmas() {
    LemmaConfig lc;
    lc.seed = cfg_.seed;
    auto results = run_lemma_suite(lc);
    std::size_t failures = 0;
    Json list = Json::array();
    for (const auto& r : results) {
      failures += r.failures;
      if (cfg_.json) {
        Json j{{"name", r.name}, {"statement", r.statement}, {"checked", r.checked},
               {"failures", r.failures}};
        if (r.failures) j["first_failure"] = r.first_failure;
        list.push_back(j);
      } else {
        out_ << r.name << " " << (r.failures ? "FAIL" : "ok") << "  " << r.statement << "  ("
             << r.checked << " checks";
        if (r.failures) out_ << ", " << r.failures << " failures, e.g. " << r.first_failure;
        out_ << ")\n";
      }
    }
    if (cfg_.json) out_ << list.dump(2) << "\n";
    return failures ? kExitProperty : kExitOk;
  }

 private:
  RunConfig cfg_;
  std::ostream& out_;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err, std::optional<std::string> env_budgets) {
  CLI::App app{"Proved-transition engine for the pi-calculus", "pires"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::size_t> unfold, cong, trace_budget, ctx;
  std::uint64_t seed = 0;
  bool json = false;
  app.add_option("--unfold", unfold, "replication unfolding budget");
  app.add_option("--cong-budget", cong, "congruence search state budget");
  app.add_option("--trace-budget", trace_budget, "trace search state budget");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--ctx", ctx, "context size when the input has no 'ctx N;' header");
  app.add_flag("--json", json, "machine-readable output");

  std::string input = "-", expr;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "input file, '-' for stdin");
    sub->add_option("-e,--expr", expr, "inline input text");
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"parse", "parse and scope-check a process"},
           {"steps", "list proved transitions"},
           {"diamond", "check cofinality for every concurrent pair"},
           {"cube", "check the cube property for every concurrent triple"},
           {"cong", "decide braiding congruence of two processes"},
           {"trace-eq", "decide causal equivalence of two traces"}}) {
    subs[name] = app.add_subcommand(name, help);
    add_input(subs[name]);
  }
  std::size_t size = 10, count = 10;
  CLI::App* rnd = app.add_subcommand("random", "generate seeded well-scoped processes");
  rnd->add_option("--size", size, "maximum process size")->check(CLI::PositiveNumber);
  rnd->add_option("--count", count, "number of processes");
  app.add_subcommand("lemmas", "run the renaming lemma suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  RunConfig cfg;
  try {
    if (env_budgets) apply_budget_spec(*env_budgets, cfg);
  } catch (const Error& e) {
    err << "PIRES_BUDGETS: " << e.what() << "\n";
    return kExitInput;
  }
  if (unfold) cfg.unfold_budget = *unfold;
  if (cong) cfg.cong_budget = *cong;
  if (trace_budget) cfg.trace_budget = *trace_budget;
  cfg.seed = seed;
  cfg.json = json;
  if (cfg.unfold_budget < 1 || cfg.cong_budget < 1 || cfg.trace_budget < 1) {
    err << "budgets must be at least 1\n";
    return kExitInput;
  }

  Driver d(cfg, out);
  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  try {
    if (name == "random") return d.random(ctx.value_or(1), size, count);
    if (name == "lemmas") return d.lemmas();

    std::string text;
    if (!expr.empty()) {
      text = expr;
    } else if (input == "-") {
      std::ostringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    } else {
      std::ifstream f(input);
      if (!f) {
        err << "cannot read " << input << "\n";
        return kExitInput;
      }
      std::ostringstream ss;
      ss << f.rdbuf();
      text = ss.str();
    }
    if (name == "trace-eq") return d.trace_eq(text, ctx);
    Query q = split_query(text, ctx);
    if (name == "parse") return d.parse(q);
    if (name == "steps") return d.steps(q);
    if (name == "diamond") return d.diamond(q);
    if (name == "cube") return d.cube(q);
    if (name == "cong") return d.cong(q);
  } catch (const Exit& e) {
    err << e.message << "\n";
    return e.code;
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kExitInput;
  } catch (const ScopeError& e) {
    err << e.what() << "\n";
    return kExitInput;
  } catch (const BudgetExceeded& e) {
    err << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitProperty;
  }
  return kExitInput;
}

}  // namespace pires
