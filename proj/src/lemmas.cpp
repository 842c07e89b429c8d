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

#include "pires/lemmas.hpp"

#include <functional>

#include "pires/generate.hpp"
#include "pires/renaming.hpp"

namespace pires {

namespace {

class Checker {
 public:
  Checker(std::string name, std::string statement) {
    r_.name = std::move(name);
    r_.statement = std::move(statement);
  }

  void expect(const Renaming& lhs, const Renaming& rhs, const std::string& where) {
    ++r_.checked;
    if (lhs == rhs) return;
    if (r_.failures++ == 0)
      r_.first_failure = where + ": " + describe(lhs) + " vs " + describe(rhs);
  }

  LemmaResult done() { return std::move(r_); }

 private:
  LemmaResult r_;
};

std::string at(std::size_t g) { return "ctx " + std::to_string(g); }

std::string at(std::size_t g, Name x) { return at(g) + ", x=" + std::to_string(x); }

}  // namespace

std::vector<LemmaResult> run_lemma_suite(const LemmaConfig& cfg) {
  std::vector<LemmaResult> out;
  const std::size_t n = cfg.max_ctx;

  Checker l1("L1", "pop(x) . push = id");
  for (std::size_t g = 0; g <= n; ++g)
    for (Name x = 0; x < g; ++x)
      l1.expect(compose(Renaming::pop(Context{g}, x), Renaming::push(Context{g})),
                Renaming::identity(Context{g}), at(g, x));
  out.push_back(l1.done());

  Checker l2("L2", "pop(0) . lift(push) = id");
  for (std::size_t g = 0; g <= n; ++g) {
    Context c{g};
    l2.expect(compose(Renaming::pop(c.extend(), 0), lift(Renaming::push(c))),
              Renaming::identity(c.extend()), at(g));
  }
  out.push_back(l2.done());

  Checker l3("L3", "lift(swap) . swap . lift(swap) = swap . lift(swap) . swap");
  for (std::size_t g = 0; g <= n; ++g) {
    Context c{g};
    Renaming up = lift(Renaming::swap(c));
    Renaming sw = Renaming::swap(c.extend());
    l3.expect(compose(up, compose(sw, up)), compose(sw, compose(up, sw)), at(g));
  }
  out.push_back(l3.done());

  Checker l4("L4", "pop(0) . swap = pop(0)");
  for (std::size_t g = 0; g <= n; ++g) {
    Context c{g + 1};
    Renaming p = Renaming::pop(c, 0);
    l4.expect(compose(p, Renaming::swap(Context{g})), p, at(g));
  }
  out.push_back(l4.done());

  Checker l5("L5", "swap . lift(push) = push, swap . push = lift(push)");
  for (std::size_t g = 0; g <= n; ++g) {
    Context c{g};
    Renaming sw = Renaming::swap(c);
    l5.expect(compose(sw, lift(Renaming::push(c))), Renaming::push(c.extend()), at(g));
    l5.expect(compose(sw, Renaming::push(c.extend())), lift(Renaming::push(c)), at(g));
  }
  out.push_back(l5.done());

  Rng rng(cfg.seed);
  auto draw = [&]() {
    std::size_t g = rng.below(n + 1);
    // A renaming out of a non-empty context needs a non-empty codomain.
    std::size_t d = g == 0 ? rng.below(n + 1) : 1 + rng.below(n);
    return random_renaming(rng, Context{g}, Context{d});
  };

  Checker l6("L6", "push . rho = lift(rho) . push");
  Checker l7("L7", "rho . pop(x) = pop(rho x) . lift(rho)");
  Checker l8("L8", "swap . lift(lift(rho)) = lift(lift(rho)) . swap");
  for (std::size_t i = 0; i < cfg.random_samples; ++i) {
    Renaming rho = draw();
    std::string where = "sample " + std::to_string(i) + " " + describe(rho);
    l6.expect(compose(Renaming::push(rho.cod()), rho), compose(lift(rho), Renaming::push(rho.dom())),
              where);
    for (Name x = 0; x < rho.dom().size; ++x)
      l7.expect(compose(rho, Renaming::pop(rho.dom(), x)),
                compose(Renaming::pop(rho.cod(), rho(x)), lift(rho)),
                where + ", x=" + std::to_string(x));
    l8.expect(compose(Renaming::swap(rho.cod()), lift(rho, 2)),
              compose(lift(rho, 2), Renaming::swap(rho.dom())), where);
  }
  out.push_back(l6.done());
  out.push_back(l7.done());
  out.push_back(l8.done());
  return out;
}

}  // namespace pires
