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

#include "apievolve/normalize.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "apievolve/dataflow.hpp"
#include "apievolve/errors.hpp"
#include "apievolve/parse.hpp"
#include "apievolve/token.hpp"

namespace apievolve::norm {

using jsrc::EditSet;
using jsrc::kNoNode;
using jsrc::Node;
using jsrc::NodeId;
using jsrc::NodeKind;
using jsrc::SourceUnit;
using jsrc::Span;

namespace {

constexpr const char* kParamBase = "parameterVariable";
constexpr const char* kReceiverBase = "classNameVariable";
constexpr const char* kReturnBase = "tempFunctionReturnValue";

std::set<std::string> identifiers_in(const std::string& text) {
  std::set<std::string> out;
  for (const std::string& t : jsrc::token_texts(text)) {
    if (!t.empty() && (std::isalpha(static_cast<unsigned char>(t[0])) ||
                       t[0] == '_' || t[0] == '$')) {
      out.insert(t);
    }
  }
  return out;
}

std::string pick_name(const std::string& base, std::set<std::string>& used) {
  if (!used.count(base)) {
    used.insert(base);
    return base;
  }
  for (int k = 1;; ++k) {
    std::string candidate = base + "_" + std::to_string(k);
    if (!used.count(candidate)) {
      used.insert(candidate);
      return candidate;
    }
  }
}

std::string literal_type(const std::string& literal) {
  if (literal.empty()) return "int";
  if (literal == "true" || literal == "false") return "boolean";
  if (literal == "null") return "Object";
  if (literal.front() == '"') return "String";
  if (literal.front() == '\'') return "char";
  std::string lower;
  for (char c : literal) lower += static_cast<char>(std::tolower(c));
  if (lower.find('.') != std::string::npos ||
      lower.find('e') != std::string::npos) {
    return lower.back() == 'f' ? "float" : "double";
  }
  if (lower.back() == 'l') return "long";
  if (lower.back() == 'f') return "float";
  if (lower.back() == 'd') return "double";
  return "int";
}

// Type for the extracted argument declaration: the mapping's parameter type
// when known, otherwise inferred from the site.
std::string param_decl_type(const SourceUnit& unit, NodeId arg,
                            const NormalizeTypes& types, std::size_t index,
                            std::vector<std::string>& diagnostics) {
  if (index < types.param_types.size() && !types.param_types[index].empty()) {
    return types.param_types[index];
  }
  const Node& a = unit.node(arg);
  if (a.kind == NodeKind::Literal) return literal_type(a.name);
  if (a.kind == NodeKind::NameExpr) {
    if (auto t = flow::declared_type_of(unit, a.name, arg)) return *t;
  }
  diagnostics.push_back("argument type defaulted to var at index " +
                        std::to_string(index));
  return "var";
}

// Type of the extracted return value, from the use site around `invocation`.
std::string return_decl_type(const SourceUnit& unit, NodeId invocation,
                             const NormalizeTypes& types,
                             std::vector<std::string>& diagnostics) {
  NodeId parent = unit.node(invocation).parent;
  if (parent != kNoNode) {
    const Node& p = unit.node(parent);
    if (p.kind == NodeKind::LocalVarDecl && p.has_init &&
        p.children.back() == invocation) {
      return p.type_text;
    }
    if (p.kind == NodeKind::AssignExpr && p.children[1] == invocation) {
      const Node& lhs = unit.node(p.children[0]);
      if (lhs.kind == NodeKind::NameExpr) {
        if (auto t = flow::declared_type_of(unit, lhs.name, p.children[0])) {
          return *t;
        }
      }
    }
    if (p.kind == NodeKind::ReturnStmt) {
      auto method = unit.ancestor(invocation, [](const Node& n) {
        return n.kind == NodeKind::MethodDecl;
      });
      if (method && !unit.node(*method).type_text.empty()) {
        return unit.node(*method).type_text;
      }
    }
  }
  if (!types.return_type.empty()) return types.return_type;
  diagnostics.push_back("return type defaulted to var");
  return "var";
}

std::string receiver_decl_type(const SourceUnit& unit, NodeId receiver,
                               const NormalizeTypes& types,
                               std::vector<std::string>& diagnostics) {
  const Node& r = unit.node(receiver);
  if (r.kind == NodeKind::NameExpr && r.name != "this" && r.name != "super") {
    if (auto t = flow::declared_type_of(unit, r.name, receiver)) return *t;
  }
  if (!types.receiver_type.empty()) return types.receiver_type;
  diagnostics.push_back("receiver type defaulted to var");
  return "var";
}

// ---- denormalization ------------------------------------------------------

struct TempInfo {
  NodeId decl = kNoNode;                 // LocalVarDecl
  std::vector<NodeId> assignments;       // AssignExpr nodes (op =)
  std::vector<NodeId> reads;             // NameExpr uses (not decl, not lhs)
  NodeId method = kNoNode;
};

bool scheme_match(const std::string& name, const char* base) {
  if (name.rfind(base, 0) != 0) return false;
  std::string rest = name.substr(std::string(base).size());
  std::size_t i = 0;
  if (std::string(base) == kParamBase) {
    if (i >= rest.size() || !std::isdigit(static_cast<unsigned char>(rest[i]))) {
      return false;
    }
    while (i < rest.size() && std::isdigit(static_cast<unsigned char>(rest[i]))) ++i;
  }
  if (i == rest.size()) return true;
  if (rest[i] != '_') return false;
  ++i;
  if (i >= rest.size()) return false;
  while (i < rest.size()) {
    if (!std::isdigit(static_cast<unsigned char>(rest[i]))) return false;
    ++i;
  }
  return true;
}

bool pure_initializer(const SourceUnit& unit, NodeId expr) {
  switch (unit.node(expr).kind) {
    case NodeKind::NameExpr:
    case NodeKind::FieldAccess:
    case NodeKind::Literal:
      return true;
    default:
      return false;
  }
}

// Extends a statement span to cover its line when the statement is alone on
// it, so deleting the statement also removes the blank residue.
Span line_extent(const SourceUnit& unit, Span stmt) {
  const std::string& text = unit.text;
  std::size_t start = stmt.start;
  while (start > 0 && (text[start - 1] == ' ' || text[start - 1] == '\t')) --start;
  bool at_line_start = (start == 0 || text[start - 1] == '\n');
  std::size_t end = stmt.end;
  while (end < text.size() && (text[end] == ' ' || text[end] == '\t')) ++end;
  if (at_line_start && end < text.size() && text[end] == '\n') {
    return Span{start, end + 1};
  }
  return stmt;
}

// True if `expr` needs parentheses when substituted into the use site.
bool needs_parens(const SourceUnit& unit, NodeId init, const SourceUnit& u2,
                  NodeId use) {
  if (unit.node(init).kind != NodeKind::BinaryExpr) return false;
  NodeId parent = u2.node(use).parent;
  if (parent == kNoNode) return false;
  switch (u2.node(parent).kind) {
    case NodeKind::BinaryExpr:
    case NodeKind::FieldAccess:
      return true;
    case NodeKind::MethodInvocation:
      // Receiver position needs parens; argument positions do not.
      return u2.node(parent).has_receiver && u2.node(parent).children[0] == use;
    default:
      return false;
  }
}

struct DenormPass {
  const SourceUnit& unit;
  const std::set<std::string>* allowed_names;
  EditSet edits;
  std::vector<std::string> diagnostics;
  int removed = 0;
  std::set<std::string> reported;

  DenormPass(const SourceUnit& u, const std::set<std::string>* allowed)
      : unit(u), allowed_names(allowed) {}

  bool name_in_scope(const std::string& name) const {
    if (!is_scheme_name(name)) return false;
    return !allowed_names || allowed_names->count(name);
  }

  // Merges `local` into the accumulated edits; on any overlap the whole
  // temp is deferred to a later round and nothing is applied.
  bool commit(const EditSet& local) {
    EditSet merged = edits;
    try {
      for (const jsrc::Edit& e : local.edits()) {
        merged.add(e.span, e.replacement);
      }
    } catch (const OverlapError&) {
      return false;
    }
    edits = std::move(merged);
    ++removed;
    return true;
  }

  std::map<std::pair<NodeId, std::string>, TempInfo> analyze() {
    std::map<std::pair<NodeId, std::string>, TempInfo> temps;
    auto method_of = [&](NodeId id) {
      auto method = unit.ancestor(id, [](const Node& a) {
        return a.kind == NodeKind::MethodDecl;
      });
      return method.value_or(kNoNode);
    };
    unit.for_each([&](NodeId id) {
      const Node& n = unit.node(id);
      if (n.kind == NodeKind::LocalVarDecl && name_in_scope(n.name)) {
        TempInfo& info = temps[{method_of(id), n.name}];
        info.decl = id;
        info.method = method_of(id);
      }
    });
    unit.for_each([&](NodeId id) {
      const Node& n = unit.node(id);
      if (n.kind == NodeKind::AssignExpr && n.name == "=" &&
          unit.node(n.children[0]).kind == NodeKind::NameExpr) {
        auto it = temps.find({method_of(id), unit.node(n.children[0]).name});
        if (it != temps.end()) it->second.assignments.push_back(id);
      }
      if (n.kind == NodeKind::NameExpr) {
        auto it = temps.find({method_of(id), n.name});
        if (it == temps.end()) return;
        NodeId parent = n.parent;
        bool is_lhs = parent != kNoNode &&
                      unit.node(parent).kind == NodeKind::AssignExpr &&
                      unit.node(parent).children[0] == id;
        if (!is_lhs) it->second.reads.push_back(id);
      }
    });
    return temps;
  }

  // Handles an initialized declaration temp. Returns true if edits were added.
  bool inline_simple(const std::string& name, const TempInfo& info) {
    const Node& decl = unit.node(info.decl);
    if (!decl.has_init || !info.assignments.empty()) return false;
    NodeId init = decl.children.back();
    bool pure = pure_initializer(unit, init);
    if (!pure && info.reads.size() != 1) {
      if (reported.insert(name).second) {
        diagnostics.push_back(
            "kept " + name +
            ": initializer may have effects and the temp is read " +
            std::to_string(info.reads.size()) + " times");
      }
      return false;
    }
    std::string init_text(unit.text_of(init));
    EditSet local;
    for (NodeId read : info.reads) {
      std::string replacement = init_text;
      if (needs_parens(unit, init, unit, read)) {
        replacement = "(" + replacement + ")";
      }
      local.add(unit.node(read).span, replacement);
    }
    local.add(line_extent(unit, decl.span), "");
    return commit(local);
  }

  // tempFunctionReturnValue folding: a bare declaration assigned in both
  // branches of one guard (or assigned once straight-line) with one read.
  bool fold_return_temp(const std::string& name, const TempInfo& info) {
    const Node& decl = unit.node(info.decl);
    if (decl.has_init) return false;
    if (info.reads.size() != 1) {
      if (reported.insert(name).second && !info.reads.empty()) {
        diagnostics.push_back("kept " + name + ": read " +
                              std::to_string(info.reads.size()) + " times");
      }
      return false;
    }
    NodeId read = info.reads[0];
    NodeId read_parent = unit.node(read).parent;

    if (info.assignments.size() == 1) {
      // Straight-line: T t; t = expr; use(t)  ->  use(expr)
      NodeId assign = info.assignments[0];
      NodeId value = unit.node(assign).children[1];
      auto assign_stmt = unit.enclosing_statement(assign);
      if (!assign_stmt ||
          unit.node(*assign_stmt).kind != NodeKind::ExprStmt ||
          unit.node(assign).span.end > unit.node(read).span.start) {
        return false;
      }
      std::string value_text(unit.text_of(value));
      if (needs_parens(unit, value, unit, read)) {
        value_text = "(" + value_text + ")";
      }
      EditSet local;
      local.add(unit.node(read).span, value_text);
      local.add(line_extent(unit, decl.span), "");
      local.add(line_extent(unit, unit.node(*assign_stmt).span), "");
      return commit(local);
    }

    if (info.assignments.size() != 2) return false;
    // Both assignments must live in the two branches of one if statement.
    auto guard = unit.ancestor(info.assignments[0], [](const Node& n) {
      return n.kind == NodeKind::IfStmt && n.has_else;
    });
    if (!guard) return false;
    const Node& g = unit.node(*guard);
    Span then_span = unit.node(g.children[1]).span;
    Span else_span = unit.node(g.children[2]).span;
    Span a0 = unit.node(info.assignments[0]).span;
    Span a1 = unit.node(info.assignments[1]).span;
    bool split = (then_span.contains(a0) && else_span.contains(a1)) ||
                 (then_span.contains(a1) && else_span.contains(a0));
    if (!split) return false;
    if (unit.node(read).span.start < g.span.end) return false;

    // The single read decides the fold target.
    if (read_parent == kNoNode) return false;
    const Node& rp = unit.node(read_parent);
    auto lhs_spans = [&](EditSet& local, const std::string& new_lhs) {
      for (NodeId a : info.assignments) {
        const Node& an = unit.node(a);
        Span lhs = unit.node(an.children[0]).span;
        local.add(lhs, new_lhs);
      }
    };
    if (rp.kind == NodeKind::AssignExpr && rp.children[1] == read &&
        unit.node(rp.children[0]).kind == NodeKind::NameExpr) {
      auto read_stmt = unit.enclosing_statement(read);
      if (!read_stmt || unit.node(*read_stmt).kind != NodeKind::ExprStmt) {
        return false;
      }
      // x = t  ->  branches assign x directly.
      EditSet local;
      lhs_spans(local, unit.node(rp.children[0]).name);
      local.add(line_extent(unit, decl.span), "");
      local.add(line_extent(unit, unit.node(*read_stmt).span), "");
      return commit(local);
    }
    if (rp.kind == NodeKind::LocalVarDecl && rp.has_init &&
        rp.children.back() == read) {
      // T x = t  ->  T x; branches assign x.
      EditSet local;
      lhs_spans(local, rp.name);
      local.add(line_extent(unit, unit.node(read_parent).span), "");
      local.add(decl.span, rp.type_text + " " + rp.name + ";");
      return commit(local);
    }
    if (rp.kind == NodeKind::ReturnStmt) {
      // return t  ->  branches return directly.
      EditSet local;
      for (NodeId a : info.assignments) {
        const Node& an = unit.node(a);
        Span lhs = unit.node(an.children[0]).span;
        Span op_region{lhs.start, unit.node(an.children[1]).span.start};
        local.add(op_region, "return ");
      }
      local.add(line_extent(unit, decl.span), "");
      local.add(line_extent(unit, unit.node(read_parent).span), "");
      return commit(local);
    }
    if (reported.insert(name).second) {
      diagnostics.push_back("kept " + name +
                            ": its read site cannot absorb the branches");
    }
    return false;
  }
};

}  // namespace

bool is_scheme_name(const std::string& name) {
  return scheme_match(name, kParamBase) || scheme_match(name, kReceiverBase) ||
         scheme_match(name, kReturnBase);
}

bool site_receiver_is_static(const SourceUnit& unit, NodeId receiver,
                             const std::string& receiver_type) {
  const Node& r = unit.node(receiver);
  if (r.kind != NodeKind::NameExpr && r.kind != NodeKind::FieldAccess) {
    return false;
  }
  std::string text = jsrc::canonical_tokens(std::string(unit.text_of(receiver)));
  std::string simple = receiver_type;
  std::size_t dot = simple.rfind('.');
  if (dot != std::string::npos) simple = simple.substr(dot + 1);
  if (!simple.empty() && (text == simple || text == receiver_type)) {
    return true;
  }
  if (r.kind == NodeKind::FieldAccess && !simple.empty()) {
    // Qualified references to the receiver type (a.b.Html) are static too.
    std::size_t last_dot = text.rfind('.');
    if (last_dot != std::string::npos && text.substr(last_dot + 1) == simple) {
      return true;
    }
  }
  if (r.kind == NodeKind::NameExpr && r.name != "this" && r.name != "super") {
    if (flow::declared_type_of(unit, r.name, receiver)) return false;
    if (std::isupper(static_cast<unsigned char>(r.name[0]))) return true;
  }
  return false;
}

NormalizeResult normalize_invocation(const SourceUnit& unit, NodeId invocation,
                                     const NormalizeTypes& types) {
  const Node& call = unit.node(invocation);
  if (call.kind != NodeKind::MethodInvocation) {
    throw NormalizeError("node is not a method invocation");
  }
  auto anchor = unit.anchor_statement(invocation);
  if (!anchor) throw NormalizeError("invocation has no enclosing statement");
  if (unit.node(*anchor).kind == NodeKind::OpaqueStmt) {
    throw NormalizeError("enclosing statement is outside the supported subset");
  }
  auto direct = unit.enclosing_statement(invocation);
  NormalizationRecord record;
  record.site = call.span;
  if (direct && *direct != *anchor) {
    record.diagnostics.push_back(
        "temporaries hoisted above the enclosing compound statement");
  }

  const Node& anchor_node = unit.node(*anchor);
  bool value_used = true;
  if (direct) {
    const Node& d = unit.node(*direct);
    value_used = !(d.kind == NodeKind::ExprStmt && d.children[0] == invocation);
  }
  record.value_used = value_used;

  std::set<std::string> used = identifiers_in(unit.text);

  // Receiver classification.
  std::optional<NodeId> receiver;
  if (call.has_receiver) receiver = call.children[0];
  bool is_static =
      receiver && (types.receiver_static ||
                   site_receiver_is_static(unit, *receiver, types.receiver_type));
  if (!receiver) {
    record.receiver_kind = ReceiverKind::None;
  } else if (is_static) {
    record.receiver_kind = ReceiverKind::Static;
  } else {
    record.receiver_kind = ReceiverKind::Instance;
  }

  std::vector<NodeId> args;
  for (std::size_t i = call.has_receiver ? 1 : 0; i < call.children.size(); ++i) {
    args.push_back(call.children[i]);
  }

  std::string indent = jsrc::indent_at(unit.text, anchor_node.span.start);
  std::string inserted;
  struct PendingTemp {
    std::string name;
    std::string original;
    std::size_t line_offset;  // offset of the decl line within `inserted`
    std::size_t line_length;
  };
  std::vector<PendingTemp> pending;
  auto emit_line = [&](const std::string& line) -> std::pair<std::size_t, std::size_t> {
    std::size_t at = inserted.size();
    inserted += line;
    std::size_t len = line.size();
    inserted += "\n" + indent;
    return {at, len};
  };

  // Arguments first, then the receiver, then the return value.
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string name = pick_name(kParamBase + std::to_string(i), used);
    std::string type = param_decl_type(unit, args[i], types, i, record.diagnostics);
    std::string original(unit.text_of(args[i]));
    auto [at, len] = emit_line(type + " " + name + " = " + original + ";");
    pending.push_back({name, original, at, len});
    record.param_temps.push_back(name);
  }
  if (record.receiver_kind == ReceiverKind::Instance) {
    std::string name = pick_name(kReceiverBase, used);
    std::string type = receiver_decl_type(unit, *receiver, types, record.diagnostics);
    std::string original(unit.text_of(*receiver));
    auto [at, len] = emit_line(type + " " + name + " = " + original + ";");
    pending.push_back({name, original, at, len});
    record.receiver_temp = name;
  }

  std::string call_receiver_text;
  if (record.receiver_kind == ReceiverKind::Instance) {
    call_receiver_text = record.receiver_temp + ".";
  } else if (record.receiver_kind == ReceiverKind::Static) {
    call_receiver_text = std::string(unit.text_of(*receiver)) + ".";
  }
  std::string call_args;
  for (std::size_t i = 0; i < record.param_temps.size(); ++i) {
    if (i) call_args += ", ";
    call_args += record.param_temps[i];
  }
  std::string normalized_call =
      call_receiver_text + call.name + "(" + call_args + ")";

  std::size_t call_stmt_offset = 0;
  std::size_t call_stmt_length = 0;
  EditSet edits;
  if (value_used) {
    std::string ret = pick_name(kReturnBase, used);
    record.ret_temp = ret;
    std::string ret_type = return_decl_type(unit, invocation, types, record.diagnostics);
    auto [dat, dlen] = emit_line(ret_type + " " + ret + ";");
    pending.push_back({ret, "", dat, dlen});
    std::string call_line = ret + " = " + normalized_call + ";";
    call_stmt_offset = inserted.size();
    call_stmt_length = call_line.size();
    inserted += call_line + "\n" + indent;
    edits.insert_before(anchor_node.span.start, inserted);
    edits.add(call.span, ret);
  } else {
    edits.insert_before(anchor_node.span.start, inserted);
    // Rewrite the call in place: receiver and each argument become temps.
    if (record.receiver_kind == ReceiverKind::Instance) {
      edits.add(unit.node(*receiver).span, record.receiver_temp);
    }
    for (std::size_t i = 0; i < args.size(); ++i) {
      edits.add(unit.node(args[i]).span, record.param_temps[i]);
    }
  }

  NormalizeResult result;
  result.record = std::move(record);
  result.record.edits = edits;
  std::string new_text = edits.apply(unit.text);
  result.unit = jsrc::parse(std::move(new_text), unit.path);

  std::size_t base = anchor_node.span.start;
  for (const PendingTemp& t : pending) {
    NormalizationRecord::Temp temp;
    temp.name = t.name;
    temp.original_text = t.original;
    temp.decl_span = Span{base + t.line_offset, base + t.line_offset + t.line_length};
    result.record.introduced.push_back(std::move(temp));
  }
  if (value_used) {
    result.record.call_stmt_span =
        Span{base + call_stmt_offset, base + call_stmt_offset + call_stmt_length};
  } else {
    // The statement holding the call, shifted by the inserted prefix and
    // resized by the in-place rewrites.
    Span stmt_span = direct ? unit.node(*direct).span : anchor_node.span;
    std::ptrdiff_t delta = 0;
    for (const jsrc::Edit& e : edits.edits()) {
      if (e.span.start >= stmt_span.start && e.span.end <= stmt_span.end &&
          !e.span.empty()) {
        delta += static_cast<std::ptrdiff_t>(e.replacement.size()) -
                 static_cast<std::ptrdiff_t>(e.span.size());
      }
    }
    result.record.call_stmt_span =
        Span{stmt_span.start + inserted.size(),
             stmt_span.end + inserted.size() + delta};
  }
  result.record.region_span =
      Span{base, result.record.call_stmt_span.end};

  return result;
}

DenormalizeResult denormalize_unit(const SourceUnit& unit,
                                   const std::vector<NormalizationRecord>* records) {
  std::set<std::string> allowed;
  if (records) {
    for (const NormalizationRecord& r : *records) {
      for (const auto& t : r.introduced) allowed.insert(t.name);
    }
  }

  DenormalizeResult result;
  result.unit = unit;
  for (int round = 0; round < 8; ++round) {
    DenormPass pass(result.unit, records ? &allowed : nullptr);
    auto temps = pass.analyze();
    for (auto& [key, info] : temps) {
      const std::string& name = key.second;
      if (info.decl == kNoNode) continue;
      if (!info.assignments.empty() && result.unit.node(info.decl).has_init) {
        if (pass.reported.insert(name).second) {
          pass.diagnostics.push_back("kept " + name + ": assigned more than once");
        }
        continue;
      }
      if (result.unit.node(info.decl).has_init) {
        pass.inline_simple(name, info);
      } else {
        pass.fold_return_temp(name, info);
      }
    }
    for (const std::string& d : pass.diagnostics) {
      if (std::find(result.diagnostics.begin(), result.diagnostics.end(), d) ==
          result.diagnostics.end()) {
        result.diagnostics.push_back(d);
      }
    }
    if (pass.edits.empty()) break;
    result.removed_temps += pass.removed;
    std::string text = pass.edits.apply(result.unit.text);
    result.unit = jsrc::parse(std::move(text), result.unit.path);
  }
  return result;
}

}  // namespace apievolve::norm
