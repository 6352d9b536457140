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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apievolve/api.hpp"
#include "apievolve/ast.hpp"
#include "apievolve/dataflow.hpp"

namespace apievolve::script {

struct Metavariable {
  enum class Kind { Expression, Identifier, Type };
  Kind kind = Kind::Expression;
  std::string name;
  bool operator==(const Metavariable&) const = default;
};

struct CarriedDefinition {
  flow::Definition::Kind kind = flow::Definition::Kind::Method;
  std::string name;
  std::string text;  // dedented declaration, verbatim Java
  bool operator==(const CarriedDefinition&) const = default;
};

// A serializable transformation rule. The pattern is the normalized
// deprecated-invocation statement; the template is the guard block that
// replaces it. Metavariable conventions: p0..pN bind the argument temps,
// recv the receiver temp, ret the return temp; T0..TN/Tr/Tret carry the
// mapping's types; b0..bK are carried bindings (resolved expressions).
struct UpdateScript {
  std::string name;
  std::vector<Metavariable> metavariables;
  std::string guard_symbol;
  int guard_level = 0;
  std::vector<std::string> match_pattern;
  std::vector<std::string> replacement_template;
  std::vector<CarriedDefinition> carried_definitions;
  std::vector<std::pair<std::string, std::string>> carried_bindings;

  // Signature and type transport.
  std::string receiver_type;
  std::string return_type;
  std::vector<std::string> param_types;

  // Derived from the pattern/template.
  std::string deprecated_name;
  std::size_t deprecated_arity = 0;
  std::string replacement_name;
  std::size_t replacement_arity = 0;
  bool receiver_static = false;
  bool has_receiver = true;
  bool value_used = false;
  std::string static_receiver;  // receiver text when static

  std::vector<std::string> diagnostics;  // generation notes, not serialized
};

// True structural equality of the serializable surface.
bool scripts_structurally_equal(const UpdateScript& a, const UpdateScript& b);

// Creates the update script from an after-update example: locates the guard,
// resolves every replacement-API argument, and turns the example into a
// reusable rule. Throws GenerateError (NoGuardFound, BothBranchesSameApi,
// UnresolvedNewArgument).
UpdateScript generate_script(const jsrc::SourceUnit& example,
                             const ApiMapping& mapping);

// Deterministic textual form (see README for the exact grammar).
std::string serialize_script(const UpdateScript& script);

// Inverse of serialize_script. Throws ScriptSyntaxError and
// UndeclaredMetavariable.
UpdateScript parse_script(const std::string& text);

// Android SDK level for a VERSION_CODES constant name or integer literal.
std::optional<int> sdk_level_for_symbol(const std::string& symbol);

}  // namespace apievolve::script
