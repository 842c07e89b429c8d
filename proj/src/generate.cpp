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

#include "pires/generate.hpp"

#include <map>
#include <utility>

namespace pires {

Process random_process(Rng& rng, Context ctx, std::size_t max_size) {
  enum Shape { kZero, kIn, kOut, kSum, kPar, kNew, kBang };
  std::vector<Shape> options{kZero};
  if (ctx.size > 0 && max_size >= 3) options.push_back(kIn);
  if (ctx.size > 0 && max_size >= 4) options.push_back(kOut);
  if (max_size >= 3) {
    options.push_back(kSum);
    options.push_back(kPar);
  }
  if (max_size >= 2) {
    options.push_back(kNew);
    options.push_back(kBang);
  }
  Shape shape = options[rng.below(options.size())];
  switch (shape) {
    case kZero:
      return Process::zero();
    case kIn: {
      Name x = rng.below(ctx.size);
      return Process::input(x, random_process(rng, ctx.extend(), max_size - 2));
    }
    case kOut: {
      Name x = rng.below(ctx.size);
      Name y = rng.below(ctx.size);
      return Process::output(x, y, random_process(rng, ctx, max_size - 3));
    }
    case kSum:
    case kPar: {
      std::size_t rest = max_size - 1;
      std::size_t left = 1 + rng.below(rest - 1);
      Process l = random_process(rng, ctx, left);
      Process r = random_process(rng, ctx, rest - left);
      return shape == kSum ? Process::choice(l, r) : Process::par(l, r);
    }
    case kNew:
      return Process::restrict(random_process(rng, ctx.extend(), max_size - 1));
    case kBang:
      return Process::replicate(random_process(rng, ctx, max_size - 1));
  }
  return Process::zero();
}

namespace {

using Table = std::map<std::pair<std::size_t, std::size_t>, std::vector<Process>>;

const std::vector<Process>& exactly(Table& memo, std::size_t ctx, std::size_t n) {
  auto key = std::make_pair(ctx, n);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::vector<Process> out;
  if (n == 1) out.push_back(Process::zero());
  if (n >= 3)
    for (Name x = 0; x < ctx; ++x)
      for (const auto& b : exactly(memo, ctx + 1, n - 2)) out.push_back(Process::input(x, b));
  if (n >= 4)
    for (Name x = 0; x < ctx; ++x)
      for (Name y = 0; y < ctx; ++y)
        for (const auto& b : exactly(memo, ctx, n - 3))
          out.push_back(Process::output(x, y, b));
  if (n >= 3) {
    for (std::size_t k = 1; k + 2 <= n; ++k) {
      const auto& ls = exactly(memo, ctx, k);
      const auto& rs = exactly(memo, ctx, n - 1 - k);
      for (const auto& l : ls)
        for (const auto& r : rs) out.push_back(Process::choice(l, r));
    }
    for (std::size_t k = 1; k + 2 <= n; ++k) {
      const auto& ls = exactly(memo, ctx, k);
      const auto& rs = exactly(memo, ctx, n - 1 - k);
      for (const auto& l : ls)
        for (const auto& r : rs) out.push_back(Process::par(l, r));
    }
  }
  if (n >= 2) {
    for (const auto& b : exactly(memo, ctx + 1, n - 1)) out.push_back(Process::restrict(b));
    for (const auto& b : exactly(memo, ctx, n - 1)) out.push_back(Process::replicate(b));
  }
  return memo.emplace(key, std::move(out)).first->second;
}

}  // namespace

std::vector<Process> all_processes(Context ctx, std::size_t max_size) {
  Table memo;
  std::vector<Process> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    const auto& v = exactly(memo, ctx.size, n);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

Renaming random_renaming(Rng& rng, Context dom, Context cod) {
  std::vector<Name> m(dom.size);
  for (auto& v : m) v = rng.below(cod.size);
  return Renaming::from_map(dom, cod, std::move(m));
}

CongProof random_cong(Rng& rng, Context ctx, const Process& p) {
  switch (p.kind()) {
    case ProcessKind::kZero:
      return CongProof::zero(ctx);
    case ProcessKind::kInput:
      return CongProof::input(p.channel(), random_cong(rng, ctx.extend(), p.body()));
    case ProcessKind::kOutput:
      return CongProof::output(p.channel(), p.payload(), random_cong(rng, ctx, p.body()));
    case ProcessKind::kChoice:
      return CongProof::choice(random_cong(rng, ctx, p.left()), random_cong(rng, ctx, p.right()));
    case ProcessKind::kPar:
      return CongProof::par(random_cong(rng, ctx, p.left()), random_cong(rng, ctx, p.right()));
    case ProcessKind::kReplicate:
      return CongProof::replicate(random_cong(rng, ctx, p.body()));
    case ProcessKind::kRestrict:
      break;
  }
  CongProof inner = CongProof::restrict(random_cong(rng, ctx.extend(), p.body()));
  if (p.body().kind() != ProcessKind::kRestrict) return inner;
  auto swap_at = [&](const Process& nn) {
    const Process& q = nn.body().body();
    if (rng.below(2) == 0) return CongProof::nu_nu_swap_inv(ctx, q);
    return CongProof::nu_nu_swap(ctx, apply(Renaming::swap(ctx), q));
  };
  switch (rng.below(4)) {
    case 0:
      return swap_at(p);
    case 1:
      return CongProof::trans(inner, swap_at(inner.target()));
    default:
      return inner;
  }
}

Trace random_trace(Rng& rng, Context ctx, const Process& p, std::size_t max_length,
                   std::size_t unfold_budget) {
  std::vector<Transition> steps;
  Context c = ctx;
  Process at = p;
  while (steps.size() < max_length) {
    auto ts = enumerate_transitions(c, at, unfold_budget);
    if (ts.empty()) break;
    steps.push_back(ts[rng.below(ts.size())]);
    c = steps.back().target_ctx();
    at = steps.back().target();
  }
  return Trace(ctx, p, std::move(steps));
}

}  // namespace pires
