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
#include <set>
#include <string>
#include <vector>

#include "apievolve/ast.hpp"

namespace apievolve::flow {

enum class UnresolvedReason {
  ExternalToFile,
  AmbiguousAssignment,
  Cycle,
  UnsupportedConstruct,
};

std::string_view unresolved_reason_name(UnresolvedReason reason);

// A method or class declaration required by a resolved expression.
struct Definition {
  enum class Kind { Method, Class };
  Kind kind;
  std::string name;
  jsrc::NodeId node = jsrc::kNoNode;
  const jsrc::SourceUnit* unit = nullptr;
  std::string text;  // dedented declaration text

  bool operator==(const Definition& other) const {
    return kind == other.kind && name == other.name;
  }
};

struct ResolvedValue {
  std::string expression;  // canonical token rendering
  std::vector<Definition> required_definitions;
  std::vector<std::pair<std::string, UnresolvedReason>> unresolved;
  std::vector<std::string> bound_used;  // bound names kept verbatim
  std::vector<std::string> diagnostics;

  bool fully_resolved() const { return unresolved.empty(); }
};

// Resolves the value of an expression within file scope. Bound names (for
// script generation: the deprecated call's argument and receiver names) are
// kept verbatim and reported via `bound_used` instead of being expanded.
// Substitution is textual, never arithmetic.
ResolvedValue resolve_expression(const jsrc::SourceUnit& unit,
                                 jsrc::NodeId expr,
                                 std::optional<jsrc::NodeId> context_method,
                                 const std::set<std::string>& bound_names = {});

struct NameResolution {
  enum class Kind { Assignment, Parameter, FieldInit, Unresolved };
  Kind kind = Kind::Unresolved;
  // Assignment: the AssignExpr or initialized LocalVarDecl.
  // Parameter: the Param node. FieldInit: the FieldDecl (has_init).
  jsrc::NodeId node = jsrc::kNoNode;
  UnresolvedReason reason = UnresolvedReason::ExternalToFile;
  std::string note;
};

// Resolution order: nearest preceding assignment in the enclosing method,
// method parameter, field initializer walking outward, unresolved.
NameResolution resolve_name(const jsrc::SourceUnit& unit,
                            const std::string& name, jsrc::NodeId use_site);

// Transitive closure of method/class definitions referenced by `expr`
// (which must belong to `unit`). Duplicates removed; cycle-safe.
std::vector<Definition> collect_required_definitions(
    const jsrc::SourceUnit& unit, jsrc::NodeId expr);

// Declared type of a name visible at `use_site`: local declarations first,
// then parameters, then fields walking classes outward.
std::optional<std::string> declared_type_of(const jsrc::SourceUnit& unit,
                                            const std::string& name,
                                            jsrc::NodeId use_site);

// Simple names of all classes declared in the unit.
std::set<std::string> declared_class_names(const jsrc::SourceUnit& unit);

// Strips the common indentation of a declaration span.
std::string dedent_declaration(const jsrc::SourceUnit& unit, jsrc::NodeId decl);

}  // namespace apievolve::flow
