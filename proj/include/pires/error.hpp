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

#ifndef PIRES_ERROR_HPP_
#define PIRES_ERROR_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace pires {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ScopeError : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

// A smart constructor was asked to build something that is not an
// instance of its rule.
class DerivationError : public Error {
 public:
  using Error::Error;
};

class NotCoinitial : public Error {
 public:
  using Error::Error;
};

class ProofMismatch : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& expected,
             const std::string& found);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
};

// Outcome of a total checking judgment. On failure `path` locates the
// offending subterm and `message` names the violated condition.
struct Report {
  bool ok = true;
  std::string path;
  std::string message;
  std::optional<std::size_t> offending;

  static Report success() { return {}; }
  static Report failure(std::string path, std::string message,
                        std::optional<std::size_t> offending = std::nullopt) {
    return Report{false, std::move(path), std::move(message), offending};
  }
  explicit operator bool() const { return ok; }
  std::string to_string() const;
};

enum class SearchStatus { kFound, kNotFound, kBudgetExceeded };

const char* to_string(SearchStatus s);

}  // namespace pires

#endif  // PIRES_ERROR_HPP_
