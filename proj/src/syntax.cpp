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

#include "pires/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace pires {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::string format_action(const Action& a) {
  // U+0304 combining macron marks output.
  switch (a.kind) {
    case ActionKind::kInput:
      return std::to_string(a.channel) + "?";
    case ActionKind::kOutput:
      return std::to_string(a.channel) + "̄⟨" +
             std::to_string(a.payload) + "⟩";
    case ActionKind::kBoundOutput:
      return std::to_string(a.channel) + "̄(ν)";
    case ActionKind::kTau:
      return "τ";
  }
  return "?";
}

std::string format_action_ascii(const Action& a) {
  switch (a.kind) {
    case ActionKind::kInput:
      return "in " + std::to_string(a.channel);
    case ActionKind::kOutput:
      return "out " + std::to_string(a.channel) + " " +
             std::to_string(a.payload);
    case ActionKind::kBoundOutput:
      return "bout " + std::to_string(a.channel);
    case ActionKind::kTau:
      return "tau";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const Action& a) {
  return os << format_action(a);
}

Context action_target(Context ctx, const Action& a) {
  return a.is_bound() ? ctx.extend() : ctx;
}

struct Process::Node {
  ProcessKind kind = ProcessKind::kZero;
  Name channel = 0;
  Name payload = 0;
  Process a;  // body or left
  Process b;  // right
  std::size_t hash = 0;
  std::size_t size = 1;
  std::size_t bang_depth = 0;
};

Process::Process() {
  // Shared 0 node; its child handles stay null.
  static const std::shared_ptr<const Node> zero(
      new Node{ProcessKind::kZero, 0, 0, Process(nullptr), Process(nullptr),
               0x51ed27, 1, 0});
  node_ = zero;
}

Process Process::input(Name x, Process body) {
  auto n = std::make_shared<Node>();
  n->kind = ProcessKind::kInput;
  n->channel = x;
  n->size = 2 + body.size();
  n->bang_depth = body.bang_depth();
  n->hash = hash_combine(hash_combine(1, x), body.hash());
  n->a = std::move(body);
  return Process(std::move(n));
}

Process Process::output(Name x, Name y, Process body) {
  auto n = std::make_shared<Node>();
  n->kind = ProcessKind::kOutput;
  n->channel = x;
  n->payload = y;
  n->size = 3 + body.size();
  n->bang_depth = body.bang_depth();
  n->hash = hash_combine(hash_combine(hash_combine(2, x), y), body.hash());
  n->a = std::move(body);
  return Process(std::move(n));
}

namespace {

template <typename NodeT>
void fill_binary(NodeT& n, std::size_t tag) {
  n.size = 1 + n.a.size() + n.b.size();
  n.bang_depth = std::max(n.a.bang_depth(), n.b.bang_depth());
  n.hash = hash_combine(hash_combine(tag, n.a.hash()), n.b.hash());
}

}  // namespace

Process Process::choice(Process l, Process r) {
  auto n = std::make_shared<Node>();
  n->kind = ProcessKind::kChoice;
  n->a = std::move(l);
  n->b = std::move(r);
  fill_binary(*n, 3);
  return Process(std::move(n));
}

Process Process::par(Process l, Process r) {
  auto n = std::make_shared<Node>();
  n->kind = ProcessKind::kPar;
  n->a = std::move(l);
  n->b = std::move(r);
  fill_binary(*n, 4);
  return Process(std::move(n));
}

Process Process::restrict(Process body) {
  auto n = std::make_shared<Node>();
  n->kind = ProcessKind::kRestrict;
  n->size = 1 + body.size();
  n->bang_depth = body.bang_depth();
  n->hash = hash_combine(5, body.hash());
  n->a = std::move(body);
  return Process(std::move(n));
}

Process Process::replicate(Process body) {
  auto n = std::make_shared<Node>();
  n->kind = ProcessKind::kReplicate;
  n->size = 1 + body.size();
  n->bang_depth = 1 + body.bang_depth();
  n->hash = hash_combine(6, body.hash());
  n->a = std::move(body);
  return Process(std::move(n));
}

ProcessKind Process::kind() const { return node_->kind; }
Name Process::channel() const { return node_->channel; }
Name Process::payload() const { return node_->payload; }
const Process& Process::body() const { return node_->a; }
const Process& Process::left() const { return node_->a; }
const Process& Process::right() const { return node_->b; }
std::size_t Process::hash() const { return node_->hash; }
std::size_t Process::size() const { return node_->size; }
std::size_t Process::bang_depth() const { return node_->bang_depth; }

bool operator==(const Process& a, const Process& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->size != b.node_->size ||
      a.node_->kind != b.node_->kind)
    return false;
  switch (a.kind()) {
    case ProcessKind::kZero:
      return true;
    case ProcessKind::kInput:
      return a.channel() == b.channel() && a.body() == b.body();
    case ProcessKind::kOutput:
      return a.channel() == b.channel() && a.payload() == b.payload() &&
             a.body() == b.body();
    case ProcessKind::kChoice:
    case ProcessKind::kPar:
      return a.left() == b.left() && a.right() == b.right();
    case ProcessKind::kRestrict:
    case ProcessKind::kReplicate:
      return a.body() == b.body();
  }
  return false;
}

namespace {

std::string join(const std::string& path, const std::string& seg) {
  return path.empty() ? seg : path + "/" + seg;
}

Report scope_rec(std::size_t ctx, const Process& p, const std::string& path) {
  switch (p.kind()) {
    case ProcessKind::kZero:
      return Report::success();
    case ProcessKind::kInput:
      if (p.channel() >= ctx)
        return Report::failure(join(path, "in.channel"), "name out of scope",
                               p.channel());
      return scope_rec(ctx + 1, p.body(), join(path, "in.body"));
    case ProcessKind::kOutput:
      if (p.channel() >= ctx)
        return Report::failure(join(path, "out.channel"), "name out of scope",
                               p.channel());
      if (p.payload() >= ctx)
        return Report::failure(join(path, "out.payload"), "name out of scope",
                               p.payload());
      return scope_rec(ctx, p.body(), join(path, "out.body"));
    case ProcessKind::kChoice:
    case ProcessKind::kPar: {
      const char* tag = p.kind() == ProcessKind::kChoice ? "choice" : "par";
      Report r = scope_rec(ctx, p.left(), join(path, std::string(tag) + ".left"));
      if (!r) return r;
      return scope_rec(ctx, p.right(), join(path, std::string(tag) + ".right"));
    }
    case ProcessKind::kRestrict:
      return scope_rec(ctx + 1, p.body(), join(path, "new.body"));
    case ProcessKind::kReplicate:
      return scope_rec(ctx, p.body(), join(path, "bang.body"));
  }
  return Report::success();
}

}  // namespace

Report check_scope(Context ctx, const Process& p) {
  return scope_rec(ctx.size, p, "");
}

Report check_action_scope(Context ctx, const Action& a, Context* target) {
  if (target) *target = action_target(ctx, a);
  if (a.has_channel() && a.channel >= ctx.size)
    return Report::failure("channel", "name out of scope", a.channel);
  if (a.kind == ActionKind::kOutput && a.payload >= ctx.size)
    return Report::failure("payload", "name out of scope", a.payload);
  return Report::success();
}

// ---------------------------------------------------------------------------
// Parsing.

namespace {

enum class Tok { kNum, kIn, kOut, kNew, kDot, kBar, kPlus, kBang, kLParen,
                 kRParen, kEnd, kBad };

struct Token {
  Tok tok;
  std::string text;
  std::size_t line;
  std::size_t column;
  std::size_t value = 0;
};

std::string describe(const Token& t) {
  if (t.tok == Tok::kEnd) return "end of input";
  return "'" + t.text + "'";
}

std::vector<Token> tokenize(std::string_view s, std::size_t line,
                            std::size_t col) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    Token t{Tok::kBad, std::string(1, c), line, col};
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      t.tok = Tok::kNum;
      t.text = std::string(s.substr(i, j - i));
      t.value = t.text.size() > 18 ? static_cast<std::size_t>(-1)
                                   : std::stoull(t.text);
      col += j - i;
      i = j;
      out.push_back(t);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      t.text = std::string(s.substr(i, j - i));
      if (t.text == "in") t.tok = Tok::kIn;
      else if (t.text == "out") t.tok = Tok::kOut;
      else if (t.text == "new") t.tok = Tok::kNew;
      col += j - i;
      i = j;
      out.push_back(t);
      continue;
    }
    switch (c) {
      case '.': t.tok = Tok::kDot; break;
      case '|': t.tok = Tok::kBar; break;
      case '+': t.tok = Tok::kPlus; break;
      case '!': t.tok = Tok::kBang; break;
      case '(': t.tok = Tok::kLParen; break;
      case ')': t.tok = Tok::kRParen; break;
      default: break;
    }
    ++col;
    ++i;
    out.push_back(t);
  }
  out.push_back(Token{Tok::kEnd, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Process parse_all() {
    Process p = choice();
    if (peek().tok != Tok::kEnd) fail("'|', '+' or end of input");
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    throw ParseError(t.line, t.column, expected, describe(t));
  }

  void expect(Tok k, const char* what) {
    if (peek().tok != k) fail(what);
    ++pos_;
  }

  Name number() {
    if (peek().tok != Tok::kNum) fail("a name (numeral)");
    return next().value;
  }

  Process choice() {
    Process l = par();
    if (peek().tok == Tok::kPlus) {
      ++pos_;
      return Process::choice(l, choice());
    }
    return l;
  }

  Process par() {
    Process l = unary();
    if (peek().tok == Tok::kBar) {
      ++pos_;
      return Process::par(l, par());
    }
    return l;
  }

  Process unary() {
    switch (peek().tok) {
      case Tok::kNum:
        if (peek().text != "0") fail("a process");
        ++pos_;
        return Process::zero();
      case Tok::kIn: {
        ++pos_;
        Name x = number();
        expect(Tok::kDot, "'.'");
        return Process::input(x, unary());
      }
      case Tok::kOut: {
        ++pos_;
        Name x = number();
        Name y = number();
        expect(Tok::kDot, "'.'");
        return Process::output(x, y, unary());
      }
      case Tok::kNew:
        ++pos_;
        return Process::restrict(unary());
      case Tok::kBang:
        ++pos_;
        return Process::replicate(unary());
      case Tok::kLParen: {
        ++pos_;
        Process p = choice();
        expect(Tok::kRParen, "')'");
        return p;
      }
      default:
        fail("'0', 'in', 'out', 'new', '!' or '('");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

bool is_binary(const Process& p) {
  return p.kind() == ProcessKind::kChoice || p.kind() == ProcessKind::kPar;
}

void format_rec(const Process& p, std::string& out);

void format_operand(const Process& p, std::string& out) {
  if (p.kind() == ProcessKind::kZero) {
    out += "0";
    return;
  }
  out += "(";
  format_rec(p, out);
  out += ")";
}

void format_body(const Process& p, std::string& out) {
  if (is_binary(p)) {
    format_operand(p, out);
  } else {
    format_rec(p, out);
  }
}

void format_rec(const Process& p, std::string& out) {
  switch (p.kind()) {
    case ProcessKind::kZero:
      out += "0";
      return;
    case ProcessKind::kInput:
      out += "in " + std::to_string(p.channel()) + ". ";
      format_body(p.body(), out);
      return;
    case ProcessKind::kOutput:
      out += "out " + std::to_string(p.channel()) + " " +
             std::to_string(p.payload()) + ". ";
      format_body(p.body(), out);
      return;
    case ProcessKind::kRestrict:
      out += "new ";
      format_body(p.body(), out);
      return;
    case ProcessKind::kReplicate:
      out += "!";
      format_body(p.body(), out);
      return;
    case ProcessKind::kChoice:
    case ProcessKind::kPar: {
      format_operand(p.left(), out);
      out += p.kind() == ProcessKind::kPar ? " | " : " + ";
      // Right-associative chains print without parentheses.
      if (p.right().kind() == p.kind())
        format_rec(p.right(), out);
      else
        format_operand(p.right(), out);
      return;
    }
  }
}

}  // namespace

Process parse_process(std::string_view text, std::size_t line0,
                      std::size_t column0) {
  Parser parser(tokenize(text, line0, column0));
  return parser.parse_all();
}

std::string format_process(const Process& p) {
  std::string out;
  format_rec(p, out);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Process& p) {
  return os << format_process(p);
}

}  // namespace pires
