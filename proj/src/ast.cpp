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

#include "apievolve/ast.hpp"

#include "apievolve/errors.hpp"

namespace apievolve::jsrc {

std::string_view node_kind_name(NodeKind kind) {
  switch (kind) {
    case NodeKind::CompilationUnit: return "CompilationUnit";
    case NodeKind::Import: return "Import";
    case NodeKind::ClassDecl: return "ClassDecl";
    case NodeKind::FieldDecl: return "FieldDecl";
    case NodeKind::MethodDecl: return "MethodDecl";
    case NodeKind::Param: return "Param";
    case NodeKind::Block: return "Block";
    case NodeKind::LocalVarDecl: return "LocalVarDecl";
    case NodeKind::ExprStmt: return "ExprStmt";
    case NodeKind::IfStmt: return "IfStmt";
    case NodeKind::ReturnStmt: return "ReturnStmt";
    case NodeKind::OpaqueStmt: return "OpaqueStmt";
    case NodeKind::Literal: return "Literal";
    case NodeKind::NameExpr: return "NameExpr";
    case NodeKind::FieldAccess: return "FieldAccess";
    case NodeKind::MethodInvocation: return "MethodInvocation";
    case NodeKind::ObjectCreation: return "ObjectCreation";
    case NodeKind::BinaryExpr: return "BinaryExpr";
    case NodeKind::AssignExpr: return "AssignExpr";
    case NodeKind::OpaqueExpr: return "OpaqueExpr";
  }
  return "?";
}

const Node& SourceUnit::node(NodeId id) const {
  if (id >= nodes.size()) {
    throw NotInUnit("node " + std::to_string(id) + " is not part of " +
                    (path.empty() ? "<memory>" : path));
  }
  return nodes[id];
}

void SourceUnit::for_each(const std::function<void(NodeId)>& fn,
                          NodeId from) const {
  NodeId start = (from == kNoNode) ? root : from;
  if (start == kNoNode) return;
  fn(start);
  for (NodeId child : node(start).children) for_each(fn, child);
}

std::optional<NodeId> SourceUnit::node_at(NodeKind kind, Span span) const {
  std::optional<NodeId> found;
  for_each([&](NodeId id) {
    if (nodes[id].kind == kind && nodes[id].span == span) found = id;
  });
  return found;
}

std::optional<NodeId> SourceUnit::ancestor(
    NodeId id, const std::function<bool(const Node&)>& pred) const {
  NodeId cur = id;
  while (cur != kNoNode) {
    if (pred(node(cur))) return cur;
    cur = node(cur).parent;
  }
  return std::nullopt;
}

bool SourceUnit::is_statement(NodeId id) const {
  switch (node(id).kind) {
    case NodeKind::LocalVarDecl:
    case NodeKind::ExprStmt:
    case NodeKind::IfStmt:
    case NodeKind::ReturnStmt:
    case NodeKind::OpaqueStmt:
    case NodeKind::Block:
      return true;
    default:
      return false;
  }
}

std::optional<NodeId> SourceUnit::enclosing_statement(NodeId id) const {
  NodeId cur = node(id).parent;
  while (cur != kNoNode) {
    if (is_statement(cur) && node(cur).kind != NodeKind::Block) return cur;
    cur = node(cur).parent;
  }
  return std::nullopt;
}

std::optional<NodeId> SourceUnit::anchor_statement(NodeId id) const {
  NodeId cur = node(id).parent;
  while (cur != kNoNode) {
    const Node& n = node(cur);
    if (is_statement(cur) && n.kind != NodeKind::Block && n.parent != kNoNode &&
        node(n.parent).kind == NodeKind::Block) {
      return cur;
    }
    cur = n.parent;
  }
  return std::nullopt;
}

EnclosingContext enclosing_context(const SourceUnit& unit, NodeId id) {
  unit.node(id);  // bounds check, throws NotInUnit
  EnclosingContext ctx;
  NodeId cur = unit.node(id).parent;
  while (cur != kNoNode) {
    const Node& n = unit.node(cur);
    if (n.kind == NodeKind::MethodDecl && !ctx.method && ctx.class_decl == kNoNode) {
      ctx.method = cur;
    }
    if (n.kind == NodeKind::ClassDecl) {
      ctx.class_decl = cur;
      break;
    }
    cur = n.parent;
  }
  if (ctx.class_decl == kNoNode) {
    throw NotInUnit("node has no enclosing class");
  }
  return ctx;
}

std::string render_edits(const SourceUnit& unit, const EditSet& edits) {
  return edits.apply(unit.text);
}

}  // namespace apievolve::jsrc
