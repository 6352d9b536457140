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

#include "apievolve/api.hpp"
#include "apievolve/ast.hpp"

namespace apievolve::readability {

// A backward slice of the statements touched by an API update, wrapped in a
// template class so it parses standalone.
struct Slice {
  std::vector<std::string> statements;
  std::string wrapped_text;
  std::string method_name;  // the sliced method
};

// Structural readability features and the closed-form score
// 1 / (1 + 0.05 L + 0.08 V + 0.02 T), strictly decreasing in each feature.
struct ReadabilityScore {
  double value = 1.0;
  std::size_t logical_lines = 0;      // L
  std::size_t distinct_locals = 0;    // V
  double mean_tokens_per_line = 0.0;  // T
};

double score_formula(std::size_t lines, std::size_t locals,
                     double tokens_per_line);

// Backward slice of every statement holding a deprecated or replacement
// invocation (whole guard blocks included) plus the declarations and
// assignments of the variables those statements read, per method.
// Throws NoApiUsage when the unit holds no matching invocation.
std::vector<Slice> slice_api_usages(const jsrc::SourceUnit& unit,
                                    const ApiMapping& mapping);
Slice slice_api_usage(const jsrc::SourceUnit& unit, const ApiMapping& mapping);

// Scores wrapped slice text (the template wrapper is excluded from the
// features) or any parseable source. Propagates ParseError.
ReadabilityScore score_readability(const std::string& text);

}  // namespace apievolve::readability
