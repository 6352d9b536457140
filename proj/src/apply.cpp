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

#include "apievolve/apply.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "apievolve/errors.hpp"
#include "apievolve/normalize.hpp"
#include "apievolve/parse.hpp"
#include "apievolve/token.hpp"
#include "json.hpp"

namespace apievolve::script {

using jsrc::EditSet;
using jsrc::kNoNode;
using jsrc::Node;
using jsrc::NodeId;
using jsrc::NodeKind;
using jsrc::SourceUnit;
using jsrc::Span;

namespace {

std::string strip_ret_assignment(const std::string& line) {
  // Removes a leading `ret = ` from a template line, indentation preserved.
  std::size_t i = 0;
  while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
  if (line.compare(i, 3, "ret") != 0) return line;
  std::size_t j = i + 3;
  while (j < line.size() && line[j] == ' ') ++j;
  if (j >= line.size() || line[j] != '=') return line;
  ++j;
  while (j < line.size() && line[j] == ' ') ++j;
  return line.substr(0, i) + line.substr(j);
}

// One updated site's bookkeeping while later edits move text around.
struct TrackedSpan {
  Span span;
  void shift(const EditSet& edits) { span = edits.remap(span); }
};

bool comment_inside(const SourceUnit& unit, Span span) {
  for (Span c : unit.comments) {
    if (span.overlaps(c)) return true;
  }
  return false;
}

std::string instantiate_template(const UpdateScript& script,
                                 const std::map<std::string, std::string>& subst,
                                 bool drop_ret, const std::string& indent) {
  std::string out;
  bool first = true;
  for (const std::string& raw : script.replacement_template) {
    std::string line = drop_ret ? strip_ret_assignment(raw) : raw;
    line = jsrc::substitute_identifiers(line, subst);
    if (!first) out += "\n" + indent;
    out += line;
    first = false;
  }
  return out;
}

}  // namespace

std::string_view outcome_name(Outcome outcome) {
  switch (outcome) {
    case Outcome::Updated: return "updated";
    case Outcome::SkippedAlreadyGuarded: return "skipped-already-guarded";
    case Outcome::SkippedDuplicateInStatement:
      return "skipped-duplicate-in-statement";
    case Outcome::Failed: return "failed";
  }
  return "?";
}

std::size_t UpdateReport::count(Outcome outcome) const {
  std::size_t n = 0;
  for (const InvocationResult& r : invocations) {
    if (r.outcome == outcome) ++n;
  }
  return n;
}

std::string report_to_json(const UpdateReport& report) {
  nlohmann::ordered_json j;
  j["target"] = report.target;
  j["invocations"] = nlohmann::ordered_json::array();
  for (const InvocationResult& r : report.invocations) {
    nlohmann::ordered_json inv;
    inv["line"] = r.line;
    inv["outcome"] = std::string(outcome_name(r.outcome));
    inv["diagnostics"] = r.diagnostics;
    j["invocations"].push_back(inv);
  }
  j["counts"]["found"] = report.invocations.size();
  j["counts"]["updated"] = report.updated();
  j["counts"]["skipped-already-guarded"] =
      report.count(Outcome::SkippedAlreadyGuarded);
  j["counts"]["skipped-duplicate-in-statement"] =
      report.count(Outcome::SkippedDuplicateInStatement);
  j["counts"]["failed"] = report.failed();
  j["diagnostics"] = report.diagnostics;
  j["phase_ms"]["creation"] = report.creation_ms;
  j["phase_ms"]["application"] = report.application_ms;
  return j.dump(2);
}

std::map<std::string, std::string> definition_renames(
    const SourceUnit& target, const std::vector<CarriedDefinition>& defs) {
  std::set<std::string> taken;
  target.for_each([&](NodeId id) {
    const Node& n = target.node(id);
    if (n.kind == NodeKind::ClassDecl ||
        (n.kind == NodeKind::MethodDecl && !n.is_constructor)) {
      taken.insert(n.name);
    }
  });
  std::map<std::string, std::string> renames;
  for (const CarriedDefinition& def : defs) {
    if (!taken.count(def.name)) {
      taken.insert(def.name);
      continue;
    }
    for (int k = 1;; ++k) {
      std::string candidate = def.name + std::to_string(k);
      if (!taken.count(candidate)) {
        renames[def.name] = candidate;
        taken.insert(candidate);
        break;
      }
    }
  }
  return renames;
}

namespace {

// Rewrites the access modifiers of a definition's text to public: the
// declaration itself, and for classes every direct method member as well.
std::string publicize_definition(const CarriedDefinition& def) {
  const std::string prefix = "class __Wrapper {\n";
  const std::string suffix = "\n}\n";
  SourceUnit unit = jsrc::parse(prefix + def.text + suffix, "<def>");
  NodeId wrapper = unit.node(unit.root).children.at(0);
  if (unit.node(wrapper).children.empty()) return def.text;
  NodeId decl = unit.node(wrapper).children.at(0);

  EditSet edits;
  auto make_public = [&](NodeId node) {
    const Node& n = unit.node(node);
    if (n.has_access) {
      if (unit.text_of(n.access_span) != "public") {
        edits.add(n.access_span, "public");
      }
    } else {
      edits.add(n.access_span, "public ");
    }
  };
  make_public(decl);
  if (unit.node(decl).kind == NodeKind::ClassDecl) {
    for (NodeId member : unit.node(decl).children) {
      if (unit.node(member).kind == NodeKind::MethodDecl) {
        make_public(member);
      }
    }
  }
  std::string out = edits.apply(unit.text);
  return out.substr(prefix.size(), out.size() - prefix.size() - suffix.size());
}

std::string reindent(const std::string& text, const std::string& indent) {
  std::string out;
  std::size_t pos = 0;
  bool first = true;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string line =
        text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
    if (!first) out += "\n";
    if (!line.empty()) out += indent;
    out += line;
    first = false;
    if (nl == std::string::npos) break;
    pos = nl + 1;
  }
  return out;
}

}  // namespace

SourceUnit copy_definitions(const SourceUnit& target,
                            const std::vector<CarriedDefinition>& defs,
                            std::span<const Span> template_regions,
                            const std::string& anchor_class_name) {
  if (defs.empty()) return target;
  std::map<std::string, std::string> renames = definition_renames(target, defs);

  // Anchor class for methods; the top-level class above it for classes.
  NodeId anchor_class = kNoNode;
  target.for_each([&](NodeId id) {
    if (target.node(id).kind == NodeKind::ClassDecl &&
        target.node(id).name == anchor_class_name && anchor_class == kNoNode) {
      anchor_class = id;
    }
  });
  if (anchor_class == kNoNode) {
    for (NodeId child : target.node(target.root).children) {
      if (target.node(child).kind == NodeKind::ClassDecl) {
        anchor_class = child;
        break;
      }
    }
  }
  if (anchor_class == kNoNode) {
    throw NormalizeError("target has no class to receive definitions");
  }
  NodeId top_class = anchor_class;
  for (NodeId cur = anchor_class; cur != kNoNode; cur = target.node(cur).parent) {
    if (target.node(cur).kind == NodeKind::ClassDecl) top_class = cur;
  }

  auto insertion_point = [&](NodeId cls) {
    Span span = target.node(cls).span;
    std::size_t brace = span.end - 1;  // the closing '}'
    std::size_t line_start = target.text.rfind('\n', brace);
    line_start = line_start == std::string::npos ? brace : line_start + 1;
    // Only rewind past pure indentation.
    for (std::size_t i = line_start; i < brace; ++i) {
      if (target.text[i] != ' ' && target.text[i] != '\t') return brace;
    }
    return line_start;
  };

  EditSet edits;
  std::string method_block;
  std::string class_block;
  for (const CarriedDefinition& def : defs) {
    CarriedDefinition renamed = def;
    renamed.text = jsrc::substitute_identifiers(def.text, renames);
    std::string body = publicize_definition(renamed);
    if (def.kind == flow::Definition::Kind::Method) {
      std::string indent =
          jsrc::indent_at(target.text, target.node(anchor_class).span.start) +
          "    ";
      method_block += "\n" + reindent(body, indent) + "\n";
    } else {
      std::string indent =
          jsrc::indent_at(target.text, target.node(top_class).span.start) +
          "    ";
      class_block += "\n" + reindent(body, indent) + "\n";
    }
  }
  if (!method_block.empty()) {
    edits.insert_before(insertion_point(anchor_class), method_block);
  }
  if (!class_block.empty()) {
    std::size_t at = insertion_point(top_class);
    if (!method_block.empty() && top_class == anchor_class) {
      // Same insertion point: methods first, then classes.
      method_block += class_block;
      edits = EditSet{};
      edits.insert_before(at, method_block);
    } else {
      edits.insert_before(at, class_block);
    }
  }

  // Rename references inside the spliced template regions.
  if (!renames.empty()) {
    for (Span region : template_regions) {
      std::string text(target.text_of(region));
      std::string replaced = jsrc::substitute_identifiers(text, renames);
      if (replaced != text) edits.add(region, replaced);
    }
  }

  std::string out = edits.apply(target.text);
  return jsrc::parse(std::move(out), target.path);
}

ApplyResult apply_script(const UpdateScript& script, const SourceUnit& target,
                         const ApplyOptions& options) {
  ApiSignature dep;
  dep.method = script.deprecated_name;
  dep.param_types.resize(script.deprecated_arity);
  dep.receiver_type = script.receiver_type;

  ApplyResult result;
  result.report.target = target.path;

  std::vector<NodeId> matches = find_invocations(target, dep);

  struct Candidate {
    Span invocation_span;
    std::size_t report_index;
  };
  std::vector<Candidate> candidates;
  std::set<NodeId> claimed_statements;
  for (NodeId m : matches) {
    InvocationResult rec;
    rec.line = jsrc::line_column(target.text, target.node(m).span.start).first;
    if (inside_sdk_guard(target, m)) {
      rec.outcome = Outcome::SkippedAlreadyGuarded;
      rec.diagnostics.push_back("an enclosing condition already tests the SDK level");
      result.report.invocations.push_back(std::move(rec));
      continue;
    }
    auto stmt = target.enclosing_statement(m);
    if (stmt && !claimed_statements.insert(*stmt).second) {
      rec.outcome = Outcome::SkippedDuplicateInStatement;
      rec.diagnostics.push_back(
          "another matched invocation shares this statement");
      result.report.invocations.push_back(std::move(rec));
      continue;
    }
    rec.outcome = Outcome::Updated;  // tentative; flips to Failed on error
    result.report.invocations.push_back(std::move(rec));
    candidates.push_back({target.node(m).span, result.report.invocations.size() - 1});
  }

  std::map<std::string, std::string> renames;
  if (!script.carried_definitions.empty()) {
    renames = definition_renames(target, script.carried_definitions);
  }

  std::string current = target.text;
  std::vector<TrackedSpan> regions;  // spliced template regions
  std::vector<norm::NormalizationRecord> records;
  std::string anchor_class_name;
  bool any_updated = false;

  for (std::size_t c = 0; c < candidates.size(); ++c) {
    InvocationResult& rec = result.report.invocations[candidates[c].report_index];
    SourceUnit unit = jsrc::parse(current, target.path);
    auto node = unit.node_at(NodeKind::MethodInvocation, candidates[c].invocation_span);
    if (!node || unit.node(*node).name != script.deprecated_name) {
      rec.outcome = Outcome::Failed;
      rec.diagnostics.push_back("site could not be relocated after earlier edits");
      continue;
    }

    // Shape checks against the pattern.
    const Node& inv = unit.node(*node);
    auto fail = [&](const std::string& why) {
      rec.outcome = Outcome::Failed;
      rec.diagnostics.push_back(why);
    };
    if (script.has_receiver != inv.has_receiver) {
      fail("receiver shape differs from the update script");
      continue;
    }
    bool site_static = false;
    if (inv.has_receiver) {
      site_static = norm::site_receiver_is_static(
          unit, inv.children[0],
          script.receiver_static ? script.static_receiver : script.receiver_type);
    }
    if (inv.has_receiver && site_static != script.receiver_static) {
      fail(site_static ? "site receiver is a type but the script expects a value"
                       : "site receiver is a value but the script expects a type");
      continue;
    }
    auto direct = unit.enclosing_statement(*node);
    bool site_value_used = true;
    if (direct) {
      const Node& d = unit.node(*direct);
      site_value_used =
          !(d.kind == NodeKind::ExprStmt && d.children[0] == *node);
    }
    if (site_value_used && !script.value_used) {
      fail("target uses the call's value but the update example discards it");
      continue;
    }
    bool drop_ret = !site_value_used && script.value_used;

    norm::NormalizeTypes types;
    types.receiver_type = script.receiver_type;
    types.param_types = script.param_types;
    types.param_types.resize(script.deprecated_arity);
    types.return_type = script.return_type;
    types.receiver_static = script.receiver_static;

    norm::NormalizationRecord record;
    SourceUnit normalized;
    try {
      auto normalize_result = norm::normalize_invocation(unit, *node, types);
      normalized = std::move(normalize_result.unit);
      record = std::move(normalize_result.record);
    } catch (const NormalizeError& e) {
      fail(e.what());
      continue;
    }
    for (const std::string& d : record.diagnostics) rec.diagnostics.push_back(d);
    if (comment_inside(unit, unit.node(*node).span)) {
      rec.diagnostics.push_back(
          "comments inside the rewritten invocation were dropped");
    }

    std::map<std::string, std::string> subst;
    for (std::size_t i = 0; i < record.param_temps.size(); ++i) {
      subst["p" + std::to_string(i)] = record.param_temps[i];
    }
    if (!record.receiver_temp.empty()) subst["recv"] = record.receiver_temp;
    if (!record.ret_temp.empty()) subst["ret"] = record.ret_temp;
    for (const auto& [name, expr] : script.carried_bindings) {
      std::string instantiated = jsrc::substitute_identifiers(expr, subst);
      if (!renames.empty()) {
        instantiated = jsrc::substitute_identifiers(instantiated, renames);
      }
      subst[name] = instantiated;
    }

    std::string indent = jsrc::indent_at(normalized.text, record.call_stmt_span.start);
    std::string block = instantiate_template(script, subst, drop_ret, indent);

    EditSet splice;
    splice.add(record.call_stmt_span, block);
    std::string next = splice.apply(normalized.text);

    // Track the spliced region and shift all pending bookkeeping.
    for (TrackedSpan& r : regions) {
      r.shift(record.edits);
      r.shift(splice);
    }
    for (std::size_t k = c + 1; k < candidates.size(); ++k) {
      candidates[k].invocation_span =
          splice.remap(record.edits.remap(candidates[k].invocation_span));
    }
    regions.push_back(
        {Span{record.call_stmt_span.start, record.call_stmt_span.start + block.size()}});
    records.push_back(record);
    if (anchor_class_name.empty()) {
      auto ctx = jsrc::enclosing_context(unit, *node);
      anchor_class_name = unit.node(ctx.class_decl).name;
    }
    current = std::move(next);
    any_updated = true;
  }

  if (!any_updated) {
    result.unit = target;
    result.normalized_text = target.text;
    result.changed = false;
    return result;
  }

  result.normalized_text = current;

  SourceUnit updated = jsrc::parse(current, target.path);
  if (!script.carried_definitions.empty()) {
    std::vector<Span> region_spans;
    for (const TrackedSpan& r : regions) region_spans.push_back(r.span);
    updated = copy_definitions(updated, script.carried_definitions,
                               region_spans, anchor_class_name);
  }

  if (options.denormalize) {
    norm::DenormalizeResult denorm = norm::denormalize_unit(updated, &records);
    for (const std::string& d : denorm.diagnostics) {
      result.report.diagnostics.push_back(d);
    }
    updated = std::move(denorm.unit);
  }

  result.unit = std::move(updated);
  result.changed = result.unit.text != target.text;
  return result;
}

}  // namespace apievolve::script
