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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace apievolve {

// Source could not be parsed (unbalanced delimiters, truncated declaration).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t line, std::size_t column)
      : std::runtime_error(message + " at " + std::to_string(line) + ":" +
                           std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class OverlapError : public std::runtime_error {
 public:
  explicit OverlapError(const std::string& message)
      : std::runtime_error(message) {}
};

class NotInUnit : public std::runtime_error {
 public:
  explicit NotInUnit(const std::string& message)
      : std::runtime_error(message) {}
};

class NormalizeError : public std::runtime_error {
 public:
  explicit NormalizeError(const std::string& message)
      : std::runtime_error(message) {}
};

class MappingError : public std::runtime_error {
 public:
  explicit MappingError(const std::string& message)
      : std::runtime_error(message) {}
};

class ScriptSyntaxError : public std::runtime_error {
 public:
  ScriptSyntaxError(std::string message, std::size_t line)
      : std::runtime_error(message + " at line " + std::to_string(line)),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class UndeclaredMetavariable : public std::runtime_error {
 public:
  explicit UndeclaredMetavariable(const std::string& name)
      : std::runtime_error("undeclared metavariable " + name), name_(name) {}

  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// Script generation failures. The kind is part of the contract: callers
// report UnresolvedNewArgument differently from a missing guard.
class GenerateError : public std::runtime_error {
 public:
  enum class Kind { NoGuardFound, BothBranchesSameApi, UnresolvedNewArgument };

  GenerateError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class NoApiUsage : public std::runtime_error {
 public:
  explicit NoApiUsage(const std::string& message)
      : std::runtime_error(message) {}
};

}  // namespace apievolve
