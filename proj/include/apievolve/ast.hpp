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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apievolve/span.hpp"

namespace apievolve::jsrc {

enum class NodeKind {
  CompilationUnit,
  Import,
  ClassDecl,
  FieldDecl,
  MethodDecl,
  Param,
  Block,
  LocalVarDecl,
  ExprStmt,
  IfStmt,
  ReturnStmt,
  OpaqueStmt,
  Literal,
  NameExpr,
  FieldAccess,
  MethodInvocation,
  ObjectCreation,
  BinaryExpr,
  AssignExpr,
  OpaqueExpr,
};

std::string_view node_kind_name(NodeKind kind);

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = static_cast<NodeId>(-1);

// One syntax node. The meaning of `name` depends on the kind:
//   ClassDecl/MethodDecl/Param/FieldDecl/LocalVarDecl: declared identifier
//   NameExpr: the identifier; FieldAccess: the member name
//   MethodInvocation: the method name; ObjectCreation: the (qualified) type
//   BinaryExpr/AssignExpr: the operator; Literal: the literal text
//   Import: the imported path
struct Node {
  NodeKind kind = NodeKind::OpaqueStmt;
  Span span;
  NodeId parent = kNoNode;
  std::vector<NodeId> children;
  std::string name;
  std::string type_text;  // declared/return type for decls, params, methods
  // For ClassDecl/MethodDecl/FieldDecl: span of the access-modifier keyword,
  // or a zero-width span at the modifier insertion point.
  Span access_span;
  bool has_access = false;
  bool has_receiver = false;  // MethodInvocation: children[0] is the receiver
  bool has_init = false;      // FieldDecl/LocalVarDecl: last child is the init
  bool has_else = false;      // IfStmt: children are cond, then[, else]
  bool is_constructor = false;
  bool is_static = false;
};

// Immutable parse result. Re-rendering with no edits reproduces `text`
// byte-for-byte because rendering starts from `text` itself.
struct SourceUnit {
  std::string path;
  std::string text;
  std::vector<Node> nodes;
  NodeId root = kNoNode;
  std::vector<Span> comments;

  const Node& node(NodeId id) const;
  std::string_view text_of(Span span) const {
    return std::string_view(text).substr(span.start, span.size());
  }
  std::string_view text_of(NodeId id) const { return text_of(node(id).span); }

  // Pre-order walk from `from` (default: root).
  void for_each(const std::function<void(NodeId)>& fn,
                NodeId from = kNoNode) const;

  // Innermost node of `kind` whose span equals `span`, if any.
  std::optional<NodeId> node_at(NodeKind kind, Span span) const;

  // Nearest ancestor (inclusive) satisfying a predicate.
  std::optional<NodeId> ancestor(
      NodeId id, const std::function<bool(const Node&)>& pred) const;

  // The statement ancestor whose parent is a Block: the insertion anchor for
  // statements spliced in front of `id`.
  std::optional<NodeId> anchor_statement(NodeId id) const;

  // The directly enclosing statement (parent chain up to the first statement
  // node, which may itself sit inside an unbraced if branch).
  std::optional<NodeId> enclosing_statement(NodeId id) const;

  bool is_statement(NodeId id) const;
};

struct EnclosingContext {
  std::optional<NodeId> method;
  NodeId class_decl = kNoNode;
};

// Nearest enclosing method (absent for field initializers) and class.
// Throws NotInUnit when the node does not belong to the unit.
EnclosingContext enclosing_context(const SourceUnit& unit, NodeId id);

// Renders `unit.text` with the edits applied. An empty EditSet returns the
// original text unchanged.
std::string render_edits(const SourceUnit& unit, const EditSet& edits);

}  // namespace apievolve::jsrc
