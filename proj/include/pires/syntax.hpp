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

// De Bruijn process and action terms.

#ifndef PIRES_SYNTAX_HPP_
#define PIRES_SYNTAX_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

#include "pires/error.hpp"

namespace pires {

using Name = std::size_t;

struct Context {
  std::size_t size = 0;

  Context extend(std::size_t k = 1) const { return Context{size + k}; }
  bool contains(Name x) const { return x < size; }
  friend bool operator==(Context a, Context b) { return a.size == b.size; }
  friend bool operator!=(Context a, Context b) { return a.size != b.size; }
};

enum class ActionKind : std::uint8_t { kInput, kOutput, kBoundOutput, kTau };

struct Action {
  ActionKind kind = ActionKind::kTau;
  Name channel = 0;
  Name payload = 0;

  static Action input(Name x) { return {ActionKind::kInput, x, 0}; }
  static Action output(Name x, Name y) { return {ActionKind::kOutput, x, y}; }
  static Action bound_output(Name x) {
    return {ActionKind::kBoundOutput, x, 0};
  }
  static Action tau() { return {ActionKind::kTau, 0, 0}; }

  // Input and bound output extend the context by one.
  bool is_bound() const {
    return kind == ActionKind::kInput || kind == ActionKind::kBoundOutput;
  }
  bool has_channel() const { return kind != ActionKind::kTau; }

  friend bool operator==(const Action& a, const Action& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case ActionKind::kTau:
        return true;
      case ActionKind::kOutput:
        return a.channel == b.channel && a.payload == b.payload;
      default:
        return a.channel == b.channel;
    }
  }
  friend bool operator!=(const Action& a, const Action& b) { return !(a == b); }
};

// Unicode rendering: 0?, 0̄⟨1⟩, 0̄(ν), τ.
std::string format_action(const Action& a);
// ASCII rendering used in identifiers and error messages: in 0, out 0 1, ...
std::string format_action_ascii(const Action& a);
std::ostream& operator<<(std::ostream& os, const Action& a);

Context action_target(Context ctx, const Action& a);

enum class ProcessKind : std::uint8_t {
  kZero,
  kInput,
  kOutput,
  kChoice,
  kPar,
  kRestrict,
  kReplicate
};

// Immutable, shared process term. Equality is structural.
class Process {
 public:
  Process();  // 0

  static Process zero() { return Process(); }
  static Process input(Name x, Process body);
  static Process output(Name x, Name y, Process body);
  static Process choice(Process l, Process r);
  static Process par(Process l, Process r);
  static Process restrict(Process body);
  static Process replicate(Process body);

  ProcessKind kind() const;
  Name channel() const;
  Name payload() const;
  // Body of a prefix, restriction or replication.
  const Process& body() const;
  const Process& left() const;
  const Process& right() const;

  std::size_t hash() const;
  // Syntax-tree node count, counting every name occurrence as a node.
  std::size_t size() const;
  // Maximum nesting depth of Replicate nodes.
  std::size_t bang_depth() const;

  bool is_prefix() const {
    return kind() == ProcessKind::kInput || kind() == ProcessKind::kOutput;
  }

  friend bool operator==(const Process& a, const Process& b);
  friend bool operator!=(const Process& a, const Process& b) {
    return !(a == b);
  }

 private:
  struct Node;
  explicit Process(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

Report check_scope(Context ctx, const Process& p);
// Also reports the target context (suc ctx for bound actions).
Report check_action_scope(Context ctx, const Action& a,
                          Context* target = nullptr);

// line0/column0 locate the first character, for error positions when the
// text is a slice of a larger input.
Process parse_process(std::string_view text, std::size_t line0 = 1,
                      std::size_t column0 = 1);
std::string format_process(const Process& p);
std::ostream& operator<<(std::ostream& os, const Process& p);

std::size_t hash_combine(std::size_t seed, std::size_t v);

}  // namespace pires

template <>
struct std::hash<pires::Process> {
  std::size_t operator()(const pires::Process& p) const { return p.hash(); }
};

#endif  // PIRES_SYNTAX_HPP_
