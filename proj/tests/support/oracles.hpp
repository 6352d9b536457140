// Copyright 2026 The apievolve Authors
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
//
// Test-only oracles. These stay independent of the implementation paths they
// check: they work on raw text with their own scanning and arithmetic.

#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracles {

// ---- integer expression evaluation (independent recursive descent) -----

class IntFolder {
 public:
  explicit IntFolder(std::string text) : text_(std::move(text)) {}

  long evaluate(const std::map<std::string, long>& env = {}) {
    env_ = &env;
    pos_ = 0;
    long v = parse_add();
    skip_ws();
    if (pos_ != text_.size()) throw std::runtime_error("trailing input: " + text_);
    return v;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  long parse_add() {
    long v = parse_mul();
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
        char op = text_[pos_++];
        long r = parse_mul();
        v = (op == '+') ? v + r : v - r;
      } else {
        return v;
      }
    }
  }

  long parse_mul() {
    long v = parse_atom();
    while (true) {
      skip_ws();
      if (pos_ < text_.size() &&
          (text_[pos_] == '*' || text_[pos_] == '/' || text_[pos_] == '%')) {
        char op = text_[pos_++];
        long r = parse_atom();
        if (op == '*') v *= r;
        if (op == '/') v /= r;
        if (op == '%') v %= r;
      } else {
        return v;
      }
    }
  }

  long parse_atom() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      long v = parse_add();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') {
        throw std::runtime_error("missing )");
      }
      ++pos_;
      return v;
    }
    if (pos_ < text_.size() && text_[pos_] == '-') {
      ++pos_;
      return -parse_atom();
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      long v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = v * 10 + (text_[pos_] - '0');
        ++pos_;
      }
      return v;
    }
    if (pos_ < text_.size() &&
        (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        name += text_[pos_++];
      }
      if (!env_ || !env_->count(name)) {
        throw std::runtime_error("unbound name: " + name);
      }
      return env_->at(name);
    }
    throw std::runtime_error("bad atom in: " + text_);
  }

  std::string text_;
  std::size_t pos_ = 0;
  const std::map<std::string, long>* env_ = nullptr;
};

inline long fold_int(const std::string& text,
                     const std::map<std::string, long>& env = {}) {
  return IntFolder(text).evaluate(env);
}

// ---- constant-chain interpreter -----------------------------------------
//
// Walks "T name = expr;" / "name = expr;" statement lines in textual order,
// building an integer environment, and reports the value of a variable.

inline std::map<std::string, long> run_chain(
    const std::vector<std::string>& statements) {
  std::map<std::string, long> env;
  for (const std::string& stmt : statements) {
    std::size_t eq = stmt.find('=');
    if (eq == std::string::npos) continue;
    std::string lhs = stmt.substr(0, eq);
    std::string rhs = stmt.substr(eq + 1);
    std::size_t semi = rhs.rfind(';');
    if (semi != std::string::npos) rhs = rhs.substr(0, semi);
    // The declared name is the last identifier on the left side.
    std::string name;
    for (std::size_t i = lhs.size(); i-- > 0;) {
      unsigned char c = lhs[i];
      if (std::isalnum(c) || c == '_') {
        name.insert(name.begin(), static_cast<char>(c));
      } else if (!name.empty()) {
        break;
      }
    }
    if (name.empty()) continue;
    env[name] = fold_int(rhs, env);
  }
  return env;
}

}  // namespace oracles
