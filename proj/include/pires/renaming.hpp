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

// Renamings between contexts and their action on names, actions and
// processes.

#ifndef PIRES_RENAMING_HPP_
#define PIRES_RENAMING_HPP_

#include <string>
#include <vector>

#include "pires/syntax.hpp"

namespace pires {

class Renaming {
 public:
  static Renaming identity(Context ctx);
  // ctx -> ctx+1, x |-> x+1.
  static Renaming push(Context ctx);
  // ctx+1 -> ctx, 0 |-> y, x+1 |-> x. Throws ScopeError unless y < ctx.
  static Renaming pop(Context ctx, Name y);
  // ctx+2 -> ctx+2, exchanging 0 and 1.
  static Renaming swap(Context ctx);
  // Throws ScopeError if an entry is not below cod.
  static Renaming from_map(Context dom, Context cod, std::vector<Name> map,
                           std::string tag = "");

  Context dom() const { return dom_; }
  Context cod() const { return cod_; }
  const std::vector<Name>& map() const { return map_; }
  const std::string& tag() const { return tag_; }
  Name operator()(Name x) const;

  bool is_identity() const;

  // Extensional; tags are ignored.
  friend bool operator==(const Renaming& a, const Renaming& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.map_ == b.map_;
  }
  friend bool operator!=(const Renaming& a, const Renaming& b) {
    return !(a == b);
  }

 private:
  Renaming(Context dom, Context cod, std::vector<Name> map, std::string tag)
      : dom_(dom), cod_(cod), map_(std::move(map)), tag_(std::move(tag)) {}

  Context dom_;
  Context cod_;
  std::vector<Name> map_;
  std::string tag_;
};

Renaming lift(const Renaming& rho);
Renaming lift(const Renaming& rho, std::size_t times);
// sigma after rho. Throws SizeMismatch unless cod(rho) = dom(sigma).
Renaming compose(const Renaming& sigma, const Renaming& rho);

Name apply(const Renaming& rho, Name x);
Action apply(const Renaming& rho, const Action& a);
Process apply(const Renaming& rho, const Process& p);

// rho/a: lift(rho) for bound a, rho otherwise.
Renaming residual_after_action(const Renaming& rho, const Action& a);

std::string describe(const Renaming& rho);

}  // namespace pires

#endif  // PIRES_RENAMING_HPP_
