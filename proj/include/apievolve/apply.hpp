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

#include <map>
#include <span>
#include <string>
#include <vector>

#include "apievolve/ast.hpp"
#include "apievolve/script.hpp"

namespace apievolve::script {

enum class Outcome {
  Updated,
  SkippedAlreadyGuarded,
  SkippedDuplicateInStatement,
  Failed,
};

std::string_view outcome_name(Outcome outcome);

struct InvocationResult {
  Outcome outcome = Outcome::Failed;
  std::size_t line = 0;  // 1-based line in the original target
  std::vector<std::string> diagnostics;
};

struct UpdateReport {
  std::string target;
  std::vector<InvocationResult> invocations;
  std::vector<std::string> diagnostics;
  double creation_ms = 0.0;
  double application_ms = 0.0;

  std::size_t count(Outcome outcome) const;
  std::size_t updated() const { return count(Outcome::Updated); }
  std::size_t skipped() const {
    return count(Outcome::SkippedAlreadyGuarded) +
           count(Outcome::SkippedDuplicateInStatement);
  }
  std::size_t failed() const { return count(Outcome::Failed); }
};

// JSON rendering with the documented field names: target, invocations[]
// (line, outcome, diagnostics[]), counts{}, diagnostics[], phase_ms{}.
std::string report_to_json(const UpdateReport& report);

struct ApplyOptions {
  bool denormalize = true;
};

struct ApplyResult {
  jsrc::SourceUnit unit;
  UpdateReport report;
  std::string normalized_text;  // state after splicing, before denormalization
  bool changed = false;
};

// Applies the script to every matching invocation: already-guarded sites and
// duplicate sites within one statement are skipped with explicit outcomes;
// the rest are normalized, spliced with the instantiated guard template, and
// cleaned up by definition copying and denormalization.
ApplyResult apply_script(const UpdateScript& script,
                         const jsrc::SourceUnit& target,
                         const ApplyOptions& options = {});

// Copies carried definitions into the target: colliding names gain the
// smallest integer suffix (references inside `template_regions` are renamed
// to match), access modifiers become public, methods land at the end of
// `anchor_class_name`, classes at the end of the top-level class.
jsrc::SourceUnit copy_definitions(const jsrc::SourceUnit& target,
                                  const std::vector<CarriedDefinition>& defs,
                                  std::span<const jsrc::Span> template_regions,
                                  const std::string& anchor_class_name);

// The rename map copy_definitions would use for these definitions.
std::map<std::string, std::string> definition_renames(
    const jsrc::SourceUnit& target, const std::vector<CarriedDefinition>& defs);

}  // namespace apievolve::script
