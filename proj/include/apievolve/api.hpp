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

#include <string>
#include <vector>

#include "apievolve/ast.hpp"

namespace apievolve {

// One API method signature: optional qualified receiver type, simple method
// name, and parameter type list. Matching elsewhere is name + arity.
struct ApiSignature {
  std::string receiver_type;  // may be empty
  std::string method;
  std::vector<std::string> param_types;

  std::size_t arity() const { return param_types.size(); }
  std::string simple_receiver() const;
  std::string to_string() const;  // qualified.Type#method(T1,T2)
};

// Parses "qualified.Type#method(T1,T2)"; the receiver part is optional.
ApiSignature parse_signature(const std::string& text);

// A one-to-one deprecated-to-replacement mapping plus its SDK guard.
struct ApiMapping {
  ApiSignature deprecated;
  ApiSignature replacement;
  std::string guard_symbol;  // e.g. android.os.Build.VERSION_CODES.M
  int guard_level = 0;       // e.g. 23
};

// Loads a mapping from "key: value" lines (deprecated:, replacement:,
// guard-symbol:, guard-level:). Throws MappingError on malformed input.
ApiMapping parse_mapping(const std::string& text);
ApiMapping load_mapping(const std::string& path);

// All MethodInvocation nodes matching the signature's simple name and arity,
// in source order. Receiver types are not checked.
std::vector<jsrc::NodeId> find_invocations(const jsrc::SourceUnit& unit,
                                           const ApiSignature& signature);

// True if any enclosing IfStmt condition contains the token sequence
// Build.VERSION.SDK_INT.
bool inside_sdk_guard(const jsrc::SourceUnit& unit, jsrc::NodeId id);

// True if this IfStmt's condition contains the SDK_INT token sequence.
bool is_sdk_guard(const jsrc::SourceUnit& unit, jsrc::NodeId if_stmt);

}  // namespace apievolve
