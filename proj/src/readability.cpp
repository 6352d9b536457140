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

#include "apievolve/readability.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "apievolve/errors.hpp"
#include "apievolve/parse.hpp"
#include "apievolve/token.hpp"

namespace apievolve::readability {

using jsrc::kNoNode;
using jsrc::Node;
using jsrc::NodeId;
using jsrc::NodeKind;
using jsrc::SourceUnit;
using jsrc::Span;

namespace {

std::set<std::string> names_read(const SourceUnit& unit, NodeId stmt) {
  std::set<std::string> out;
  unit.for_each(
      [&](NodeId id) {
        const Node& n = unit.node(id);
        if (n.kind == NodeKind::NameExpr) out.insert(n.name);
        if (n.kind == NodeKind::OpaqueExpr || n.kind == NodeKind::OpaqueStmt) {
          // Token scan inside opaque regions keeps the slice conservative.
          for (const std::string& t :
               jsrc::token_texts(std::string(unit.text_of(id)))) {
            if (!t.empty() &&
                (std::isalpha(static_cast<unsigned char>(t[0])) || t[0] == '_')) {
              out.insert(t);
            }
          }
        }
      },
      stmt);
  return out;
}

std::string dedent_to(const SourceUnit& unit, Span span,
                      const std::string& new_indent) {
  std::string indent = jsrc::indent_at(unit.text, span.start);
  std::string body(unit.text_of(span));
  std::string out;
  std::size_t pos = 0;
  bool first = true;
  while (pos <= body.size()) {
    std::size_t nl = body.find('\n', pos);
    std::string line =
        body.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
    if (first) {
      out += new_indent + line;
    } else if (line.rfind(indent, 0) == 0) {
      out += new_indent + line.substr(indent.size());
    } else {
      out += new_indent + line;
    }
    first = false;
    if (nl == std::string::npos) break;
    out += "\n";
    pos = nl + 1;
  }
  return out;
}

struct LineStats {
  std::size_t lines = 0;
  std::size_t tokens = 0;
};

void count_statements(const SourceUnit& unit, NodeId node, LineStats& stats) {
  const Node& n = unit.node(node);
  switch (n.kind) {
    case NodeKind::Block:
      for (NodeId c : n.children) count_statements(unit, c, stats);
      return;
    case NodeKind::IfStmt: {
      stats.lines += 1;  // the branch header
      stats.tokens += jsrc::token_texts(std::string(unit.text_of(n.children[0]))).size() + 1;
      count_statements(unit, n.children[1], stats);
      if (n.has_else) count_statements(unit, n.children[2], stats);
      return;
    }
    case NodeKind::LocalVarDecl:
    case NodeKind::ExprStmt:
    case NodeKind::ReturnStmt:
    case NodeKind::OpaqueStmt: {
      stats.lines += 1;
      stats.tokens += jsrc::token_texts(std::string(unit.text_of(node))).size();
      return;
    }
    default:
      for (NodeId c : n.children) count_statements(unit, c, stats);
      return;
  }
}

void count_locals(const SourceUnit& unit, NodeId node,
                  std::set<std::string>& names) {
  unit.for_each(
      [&](NodeId id) {
        const Node& n = unit.node(id);
        if (n.kind == NodeKind::LocalVarDecl || n.kind == NodeKind::Param ||
            n.kind == NodeKind::FieldDecl) {
          names.insert(n.name);
        }
      },
      node);
}

}  // namespace

double score_formula(std::size_t lines, std::size_t locals,
                     double tokens_per_line) {
  return 1.0 / (1.0 + 0.05 * static_cast<double>(lines) +
                0.08 * static_cast<double>(locals) + 0.02 * tokens_per_line);
}

std::vector<Slice> slice_api_usages(const SourceUnit& unit,
                                    const ApiMapping& mapping) {
  std::vector<NodeId> invocations = find_invocations(unit, mapping.deprecated);
  for (NodeId id : find_invocations(unit, mapping.replacement)) {
    if (std::find(invocations.begin(), invocations.end(), id) ==
        invocations.end()) {
      invocations.push_back(id);
    }
  }
  if (invocations.empty()) {
    throw NoApiUsage("no deprecated or replacement API invocation found");
  }

  // Group anchors per enclosing method.
  std::map<NodeId, std::vector<NodeId>> by_method;
  for (NodeId inv : invocations) {
    auto method = unit.ancestor(inv, [](const Node& n) {
      return n.kind == NodeKind::MethodDecl;
    });
    if (!method) continue;
    // The anchor is the whole guard when the invocation sits inside one.
    NodeId anchor = kNoNode;
    NodeId cur = inv;
    while (cur != kNoNode && cur != *method) {
      const Node& n = unit.node(cur);
      if (n.kind == NodeKind::IfStmt && is_sdk_guard(unit, cur)) anchor = cur;
      cur = n.parent;
    }
    if (anchor == kNoNode) {
      auto stmt = unit.anchor_statement(inv);
      if (!stmt) continue;
      anchor = *stmt;
    }
    auto& list = by_method[*method];
    if (std::find(list.begin(), list.end(), anchor) == list.end()) {
      list.push_back(anchor);
    }
  }
  if (by_method.empty()) {
    throw NoApiUsage("API invocations exist only outside method bodies");
  }

  std::vector<Slice> slices;
  for (const auto& [method, anchors] : by_method) {
    // Backward closure over the method's statements.
    std::vector<NodeId> body_stmts;
    NodeId body = unit.node(method).children.back();
    if (unit.node(body).kind == NodeKind::Block) {
      for (NodeId c : unit.node(body).children) body_stmts.push_back(c);
    }
    std::set<NodeId> selected(anchors.begin(), anchors.end());
    std::set<std::string> wanted;
    for (NodeId a : anchors) {
      auto reads = names_read(unit, a);
      wanted.insert(reads.begin(), reads.end());
    }
    bool grew = true;
    while (grew) {
      grew = false;
      for (NodeId stmt : body_stmts) {
        if (selected.count(stmt)) continue;
        const Node& n = unit.node(stmt);
        bool include = false;
        if (n.kind == NodeKind::LocalVarDecl && wanted.count(n.name)) {
          include = true;
        }
        if (n.kind == NodeKind::ExprStmt &&
            unit.node(n.children[0]).kind == NodeKind::AssignExpr) {
          const Node& assign = unit.node(n.children[0]);
          const Node& lhs = unit.node(assign.children[0]);
          if (lhs.kind == NodeKind::NameExpr && wanted.count(lhs.name)) {
            include = true;
          }
        }
        if (include) {
          selected.insert(stmt);
          auto reads = names_read(unit, stmt);
          wanted.insert(reads.begin(), reads.end());
          grew = true;
        }
      }
    }

    std::vector<NodeId> ordered(selected.begin(), selected.end());
    std::sort(ordered.begin(), ordered.end(), [&](NodeId a, NodeId b) {
      return unit.node(a).span.start < unit.node(b).span.start;
    });

    Slice slice;
    slice.method_name = unit.node(method).name;
    std::string body_text;
    for (NodeId stmt : ordered) {
      slice.statements.push_back(std::string(unit.text_of(stmt)));
      body_text += dedent_to(unit, unit.node(stmt).span, "        ") + "\n";
    }
    slice.wrapped_text =
        "class MainActivity {\n"
        "    public static void main() {\n" +
        body_text +
        "    }\n"
        "}\n";
    // Wrapped slices must stand alone.
    jsrc::parse(slice.wrapped_text, "<slice>");
    slices.push_back(std::move(slice));
  }
  return slices;
}

Slice slice_api_usage(const SourceUnit& unit, const ApiMapping& mapping) {
  return slice_api_usages(unit, mapping).front();
}

ReadabilityScore score_readability(const std::string& text) {
  SourceUnit unit = jsrc::parse(text, "<score>");

  // When the text is a wrapped slice, score the slice body only.
  NodeId region = unit.root;
  const Node& root = unit.node(unit.root);
  std::vector<NodeId> classes;
  for (NodeId c : root.children) {
    if (unit.node(c).kind == NodeKind::ClassDecl) classes.push_back(c);
  }
  if (classes.size() == 1 && unit.node(classes[0]).name == "MainActivity") {
    const Node& cls = unit.node(classes[0]);
    if (cls.children.size() == 1 &&
        unit.node(cls.children[0]).kind == NodeKind::MethodDecl &&
        unit.node(cls.children[0]).name == "main") {
      region = unit.node(cls.children[0]).children.back();
    }
  }

  LineStats stats;
  count_statements(unit, region, stats);
  std::set<std::string> locals;
  count_locals(unit, region, locals);

  ReadabilityScore score;
  score.logical_lines = stats.lines;
  score.distinct_locals = locals.size();
  score.mean_tokens_per_line =
      stats.lines == 0 ? 0.0
                       : static_cast<double>(stats.tokens) /
                             static_cast<double>(stats.lines);
  score.value = score_formula(score.logical_lines, score.distinct_locals,
                              score.mean_tokens_per_line);
  return score;
}

}  // namespace apievolve::readability
