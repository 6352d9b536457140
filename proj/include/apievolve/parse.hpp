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

#include "apievolve/ast.hpp"

namespace apievolve::jsrc {

// Parses a middleweight-Java source file. Constructs outside the supported
// subset (loops, lambdas, anonymous classes, switch, try, ...) are captured
// as balanced-delimiter Opaque nodes and never rewritten internally.
// Throws ParseError for unbalanced delimiters or truncated declarations.
SourceUnit parse(std::string text, std::string path = "");

// Parses a single expression snippet (used for resolved values and script
// templates). The returned unit's root is the expression node.
SourceUnit parse_expression_snippet(const std::string& expression_text);

// Parses a statement sequence as the body of a synthetic method and returns
// the unit; `body_block(unit)` retrieves the Block holding the statements.
SourceUnit parse_statements_snippet(const std::string& statements_text);
NodeId body_block(const SourceUnit& snippet_unit);

}  // namespace apievolve::jsrc
