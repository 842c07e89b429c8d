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

#include "pires/renaming.hpp"

#include <sstream>

namespace pires {

Renaming Renaming::identity(Context ctx) {
  std::vector<Name> m(ctx.size);
  for (Name x = 0; x < ctx.size; ++x) m[x] = x;
  return Renaming(ctx, ctx, std::move(m), "id");
}

Renaming Renaming::push(Context ctx) {
  std::vector<Name> m(ctx.size);
  for (Name x = 0; x < ctx.size; ++x) m[x] = x + 1;
  return Renaming(ctx, ctx.extend(), std::move(m), "push");
}

Renaming Renaming::pop(Context ctx, Name y) {
  if (y >= ctx.size)
    throw ScopeError("pop: name " + std::to_string(y) +
                     " not in context of size " + std::to_string(ctx.size));
  std::vector<Name> m(ctx.size + 1);
  m[0] = y;
  for (Name x = 0; x < ctx.size; ++x) m[x + 1] = x;
  return Renaming(ctx.extend(), ctx, std::move(m),
                  "pop(" + std::to_string(y) + ")");
}

Renaming Renaming::swap(Context ctx) {
  std::vector<Name> m(ctx.size + 2);
  m[0] = 1;
  m[1] = 0;
  for (Name x = 2; x < ctx.size + 2; ++x) m[x] = x;
  return Renaming(ctx.extend(2), ctx.extend(2), std::move(m), "swap");
}

Renaming Renaming::from_map(Context dom, Context cod, std::vector<Name> map,
                            std::string tag) {
  if (map.size() != dom.size)
    throw SizeMismatch("renaming map has " + std::to_string(map.size()) +
                       " entries for a domain of size " +
                       std::to_string(dom.size));
  for (Name v : map)
    if (v >= cod.size)
      throw ScopeError("renaming entry " + std::to_string(v) +
                       " outside codomain of size " + std::to_string(cod.size));
  return Renaming(dom, cod, std::move(map), std::move(tag));
}

Name Renaming::operator()(Name x) const {
  if (x >= dom_.size)
    throw ScopeError("name " + std::to_string(x) +
                     " outside renaming domain of size " +
                     std::to_string(dom_.size));
  return map_[x];
}

bool Renaming::is_identity() const {
  if (dom_ != cod_) return false;
  for (Name x = 0; x < map_.size(); ++x)
    if (map_[x] != x) return false;
  return true;
}

Renaming lift(const Renaming& rho) {
  std::vector<Name> m(rho.dom().size + 1);
  m[0] = 0;
  for (Name x = 0; x < rho.dom().size; ++x) m[x + 1] = rho.map()[x] + 1;
  return Renaming::from_map(rho.dom().extend(), rho.cod().extend(),
                            std::move(m), "lift(" + describe(rho) + ")");
}

Renaming lift(const Renaming& rho, std::size_t times) {
  Renaming r = rho;
  for (std::size_t i = 0; i < times; ++i) r = lift(r);
  return r;
}

Renaming compose(const Renaming& sigma, const Renaming& rho) {
  if (rho.cod() != sigma.dom())
    throw SizeMismatch("compose: codomain size " +
                       std::to_string(rho.cod().size) +
                       " does not match domain size " +
                       std::to_string(sigma.dom().size));
  std::vector<Name> m(rho.dom().size);
  for (Name x = 0; x < m.size(); ++x) m[x] = sigma.map()[rho.map()[x]];
  return Renaming::from_map(rho.dom(), sigma.cod(), std::move(m),
                            "compose(" + describe(sigma) + ", " +
                                describe(rho) + ")");
}

Name apply(const Renaming& rho, Name x) { return rho(x); }

Action apply(const Renaming& rho, const Action& a) {
  switch (a.kind) {
    case ActionKind::kInput:
      return Action::input(rho(a.channel));
    case ActionKind::kOutput:
      return Action::output(rho(a.channel), rho(a.payload));
    case ActionKind::kBoundOutput:
      return Action::bound_output(rho(a.channel));
    case ActionKind::kTau:
      return a;
  }
  return a;
}

namespace {

// Renames under `depth` binders, which is the same as applying
// lift^depth(rho) without materialising it.
Name rename_at(const Renaming& rho, std::size_t depth, Name x) {
  if (x < depth) return x;
  return rho(x - depth) + depth;
}

Process apply_rec(const Renaming& rho, std::size_t depth, const Process& p) {
  switch (p.kind()) {
    case ProcessKind::kZero:
      return p;
    case ProcessKind::kInput:
      return Process::input(rename_at(rho, depth, p.channel()),
                            apply_rec(rho, depth + 1, p.body()));
    case ProcessKind::kOutput:
      return Process::output(rename_at(rho, depth, p.channel()),
                             rename_at(rho, depth, p.payload()),
                             apply_rec(rho, depth, p.body()));
    case ProcessKind::kChoice:
      return Process::choice(apply_rec(rho, depth, p.left()),
                             apply_rec(rho, depth, p.right()));
    case ProcessKind::kPar:
      return Process::par(apply_rec(rho, depth, p.left()),
                          apply_rec(rho, depth, p.right()));
    case ProcessKind::kRestrict:
      return Process::restrict(apply_rec(rho, depth + 1, p.body()));
    case ProcessKind::kReplicate:
      return Process::replicate(apply_rec(rho, depth, p.body()));
  }
  return p;
}

}  // namespace

Process apply(const Renaming& rho, const Process& p) {
  return apply_rec(rho, 0, p);
}

Renaming residual_after_action(const Renaming& rho, const Action& a) {
  Report r = check_action_scope(rho.dom(), a);
  if (!r)
    throw ScopeError("residual_after_action: " + r.to_string());
  return a.is_bound() ? lift(rho) : rho;
}

std::string describe(const Renaming& rho) {
  if (!rho.tag().empty()) return rho.tag();
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rho.map().size(); ++i)
    os << (i ? "," : "") << rho.map()[i];
  os << "]";
  return os.str();
}

}  // namespace pires
