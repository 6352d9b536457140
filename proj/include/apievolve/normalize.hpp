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
#include <vector>

#include "apievolve/ast.hpp"

namespace apievolve::norm {

enum class ReceiverKind { Instance, Static, None };

// Type information for the temporaries a site introduces. Receiver and
// return types fall back from site-resolved declarations to these.
struct NormalizeTypes {
  std::string receiver_type;
  std::vector<std::string> param_types;
  std::string return_type;
  bool receiver_static = false;
};

struct NormalizationRecord {
  jsrc::Span site;  // invocation span in the original unit
  struct Temp {
    std::string name;
    std::string original_text;
    jsrc::Span decl_span;  // in the normalized unit
  };
  std::vector<Temp> introduced;
  ReceiverKind receiver_kind = ReceiverKind::None;
  bool value_used = false;

  std::string receiver_temp;  // empty for static/none receivers
  std::vector<std::string> param_temps;
  std::string ret_temp;  // empty when the value is discarded

  // Spans in the normalized unit: the whole inserted region and the
  // statement holding the normalized invocation.
  jsrc::Span region_span;
  jsrc::Span call_stmt_span;

  jsrc::EditSet edits;  // edits that produced the normalized text
  std::vector<std::string> diagnostics;
};

struct NormalizeResult {
  jsrc::SourceUnit unit;
  NormalizationRecord record;
};

// Rewrites one invocation site into temporary-variable form: arguments into
// parameterVariableN, an instance receiver into classNameVariable, and a used
// return value through tempFunctionReturnValue. Static
// receivers stay in place.
// Throws NormalizeError when the enclosing statement is opaque.
NormalizeResult normalize_invocation(const jsrc::SourceUnit& unit,
                                     jsrc::NodeId invocation,
                                     const NormalizeTypes& types);

struct DenormalizeResult {
  jsrc::SourceUnit unit;
  std::vector<std::string> diagnostics;
  int removed_temps = 0;
};

// Removes scheme-named temporaries (parameterVariableN, classNameVariable,
// tempFunctionReturnValue, optionally suffixed _k) and inlines their values.
// A temp is inlined only when it is assigned exactly once and its initializer
// is a name/field-access/literal or it is used exactly once. Return-value
// temps assigned in both branches of one guard fold into their single read.
// When `records` is given, only the recorded names are considered.
DenormalizeResult denormalize_unit(
    const jsrc::SourceUnit& unit,
    const std::vector<NormalizationRecord>* records = nullptr);

// True if the identifier follows the temp naming scheme.
bool is_scheme_name(const std::string& name);

// True when a receiver expression denotes a type rather than a value: it
// matches the expected receiver type's name, or it is an unresolvable
// capitalized name.
bool site_receiver_is_static(const jsrc::SourceUnit& unit,
                             jsrc::NodeId receiver,
                             const std::string& receiver_type);

}  // namespace apievolve::norm
