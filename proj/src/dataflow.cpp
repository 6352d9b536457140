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

#include "apievolve/dataflow.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "apievolve/token.hpp"

namespace apievolve::flow {

using jsrc::kNoNode;
using jsrc::Node;
using jsrc::NodeId;
using jsrc::NodeKind;
using jsrc::SourceUnit;
using jsrc::Span;

namespace {

constexpr int kMaxResolveDepth = 32;

std::string simple_type_name(const std::string& type_text) {
  std::string t = type_text;
  std::size_t angle = t.find('<');
  if (angle != std::string::npos) t = t.substr(0, angle);
  std::size_t bracket = t.find('[');
  if (bracket != std::string::npos) t = t.substr(0, bracket);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  std::size_t dot = t.rfind('.');
  return dot == std::string::npos ? t : t.substr(dot + 1);
}

std::map<std::string, NodeId> class_index(const SourceUnit& unit) {
  std::map<std::string, NodeId> out;
  unit.for_each([&](NodeId id) {
    if (unit.node(id).kind == NodeKind::ClassDecl) {
      out.emplace(unit.node(id).name, id);
    }
  });
  return out;
}

// Field of `name` in `cls` or any enclosing class, walking outward.
std::optional<NodeId> find_field_outward(const SourceUnit& unit, NodeId cls,
                                         const std::string& name) {
  NodeId cur = cls;
  while (cur != kNoNode) {
    const Node& n = unit.node(cur);
    if (n.kind == NodeKind::ClassDecl) {
      for (NodeId member : n.children) {
        if (unit.node(member).kind == NodeKind::FieldDecl &&
            unit.node(member).name == name) {
          return member;
        }
      }
    }
    cur = n.parent;
  }
  return std::nullopt;
}

std::optional<NodeId> find_method_in_class(const SourceUnit& unit, NodeId cls,
                                           const std::string& name) {
  for (NodeId member : unit.node(cls).children) {
    if (unit.node(member).kind == NodeKind::MethodDecl &&
        unit.node(member).name == name &&
        !unit.node(member).is_constructor) {
      return member;
    }
  }
  return std::nullopt;
}

// Unqualified call target: enclosing classes first, then top-level classes.
std::optional<NodeId> find_method_for_call(const SourceUnit& unit,
                                           NodeId use_site,
                                           const std::string& name) {
  NodeId cur = unit.node(use_site).parent;
  while (cur != kNoNode) {
    if (unit.node(cur).kind == NodeKind::ClassDecl) {
      if (auto m = find_method_in_class(unit, cur, name)) return m;
    }
    cur = unit.node(cur).parent;
  }
  for (NodeId top : unit.node(unit.root).children) {
    if (unit.node(top).kind == NodeKind::ClassDecl) {
      if (auto m = find_method_in_class(unit, top, name)) return m;
    }
  }
  return std::nullopt;
}

struct Resolver {
  const SourceUnit& unit;
  std::set<std::string> bound;
  ResolvedValue result;
  std::set<NodeId> expanding;  // declarations currently being expanded
  std::map<std::string, NodeId> classes;

  explicit Resolver(const SourceUnit& u, std::set<std::string> b)
      : unit(u), bound(std::move(b)), classes(class_index(u)) {}

  void note_unresolved(const std::string& name, UnresolvedReason reason,
                       const std::string& note = "") {
    for (const auto& [n, r] : result.unresolved) {
      if (n == name && r == reason) return;
    }
    result.unresolved.emplace_back(name, reason);
    if (!note.empty()) result.diagnostics.push_back(note);
  }

  void add_definition(Definition def) {
    for (const Definition& d : result.required_definitions) {
      if (d == def) return;
    }
    result.required_definitions.push_back(std::move(def));
  }

  bool has_definition(const Definition& def) const {
    for (const Definition& d : result.required_definitions) {
      if (d == def) return true;
    }
    return false;
  }

  Definition make_definition(Definition::Kind kind, NodeId node) {
    Definition def;
    def.kind = kind;
    def.name = unit.node(node).name;
    def.node = node;
    def.unit = &unit;
    def.text = dedent_declaration(unit, node);
    return def;
  }

  std::string verbatim(NodeId expr) {
    return jsrc::canonical_tokens(std::string(unit.text_of(expr)));
  }

  // Collects definitions referenced from a subtree without rewriting it
  // (used for method bodies and for already-resolved expressions).
  void collect_from_subtree(NodeId node, int depth) {
    if (depth > kMaxResolveDepth) return;
    const Node& n = unit.node(node);
    if (n.kind == NodeKind::MethodInvocation) {
      if (!n.has_receiver) {
        if (auto m = find_method_for_call(unit, node, n.name)) {
          collect_method_definition(*m, depth);
        }
      } else {
        collect_receiver_class(n.children[0], depth);
      }
    }
    if (n.kind == NodeKind::ObjectCreation) {
      auto it = classes.find(simple_type_name(n.name));
      if (it != classes.end()) collect_class_definition(it->second, depth);
    }
    for (NodeId c : n.children) collect_from_subtree(c, depth + 1);
  }

  void collect_receiver_class(NodeId receiver, int depth) {
    const Node& r = unit.node(receiver);
    std::optional<std::string> type;
    if (r.kind == NodeKind::NameExpr && r.name != "this" && r.name != "super") {
      type = declared_type_of(unit, r.name, receiver);
    } else if (r.kind == NodeKind::ObjectCreation) {
      type = r.name;
    }
    if (!type) return;
    auto it = classes.find(simple_type_name(*type));
    if (it != classes.end()) collect_class_definition(it->second, depth);
  }

  void collect_method_definition(NodeId method, int depth) {
    // A method belonging to a nested class is carried as the whole class.
    NodeId owner = unit.node(method).parent;
    bool nested_owner = false;
    NodeId walk = owner == kNoNode ? kNoNode : unit.node(owner).parent;
    while (walk != kNoNode) {
      if (unit.node(walk).kind == NodeKind::ClassDecl) {
        nested_owner = true;
        break;
      }
      walk = unit.node(walk).parent;
    }
    if (nested_owner && owner != kNoNode) {
      collect_class_definition(owner, depth);
      return;
    }
    if (expanding.count(method)) {
      result.diagnostics.push_back("definition cycle through " +
                                   unit.node(method).name);
      return;
    }
    Definition def = make_definition(Definition::Kind::Method, method);
    if (has_definition(def)) return;
    add_definition(def);
    expanding.insert(method);
    for (NodeId c : unit.node(method).children) {
      collect_from_subtree(c, depth + 1);
    }
    expanding.erase(method);
  }

  void collect_class_definition(NodeId cls, int depth) {
    if (expanding.count(cls)) {
      result.diagnostics.push_back("definition cycle through " +
                                   unit.node(cls).name);
      return;
    }
    Definition def = make_definition(Definition::Kind::Class, cls);
    if (has_definition(def)) return;
    add_definition(def);
    expanding.insert(cls);
    for (NodeId member : unit.node(cls).children) {
      collect_from_subtree(member, depth + 1);
    }
    expanding.erase(cls);
  }

  // ---- value resolution ----------------------------------------------

  // A resolved fragment: its text, and whether its top level is a binary
  // operator (such fragments get parentheses in operand/receiver slots so
  // textual substitution preserves evaluation order).
  struct Fragment {
    std::string text;
    bool binary = false;
  };

  static std::string guarded(const Fragment& f) {
    return f.binary ? "(" + f.text + ")" : f.text;
  }

  Fragment resolve(NodeId expr, int depth) {
    if (depth > kMaxResolveDepth) {
      std::string text = verbatim(expr);
      note_unresolved(text, UnresolvedReason::Cycle,
                      "resolution depth limit reached at " + text);
      return {text, true};
    }
    const Node& n = unit.node(expr);
    switch (n.kind) {
      case NodeKind::Literal:
        return {n.name, false};
      case NodeKind::NameExpr:
        return resolve_name_expr(expr, depth);
      case NodeKind::FieldAccess:
        return resolve_field_access(expr, depth);
      case NodeKind::MethodInvocation:
        return resolve_invocation(expr, depth);
      case NodeKind::ObjectCreation:
        return resolve_creation(expr, depth);
      case NodeKind::BinaryExpr: {
        Fragment lhs = resolve(n.children[0], depth + 1);
        Fragment rhs = resolve(n.children[1], depth + 1);
        return {guarded(lhs) + " " + n.name + " " + guarded(rhs), true};
      }
      default: {
        std::string text = verbatim(expr);
        note_unresolved(text, UnresolvedReason::UnsupportedConstruct,
                        "unsupported construct kept verbatim: " + text);
        return {text, true};
      }
    }
  }

  Fragment resolve_name_expr(NodeId expr, int depth) {
    const std::string& name = unit.node(expr).name;
    if (name == "this" || name == "super") {
      result.diagnostics.push_back(
          "'" + name + "' kept verbatim; it refers to the enclosing instance");
      return {name, false};
    }
    if (bound.count(name)) {
      if (std::find(result.bound_used.begin(), result.bound_used.end(), name) ==
          result.bound_used.end()) {
        result.bound_used.push_back(name);
      }
      return {name, false};
    }
    NameResolution res = apievolve::flow::resolve_name(unit, name, expr);
    switch (res.kind) {
      case NameResolution::Kind::Assignment: {
        const Node& def = unit.node(res.node);
        NodeId value = def.kind == NodeKind::AssignExpr
                           ? def.children[1]
                           : def.children.back();  // LocalVarDecl init
        if (expanding.count(res.node)) {
          note_unresolved(name, UnresolvedReason::Cycle,
                          "assignment cycle through " + name);
          return {name, false};
        }
        expanding.insert(res.node);
        Fragment out = resolve(value, depth + 1);
        expanding.erase(res.node);
        return out;
      }
      case NameResolution::Kind::Parameter:
        note_unresolved(name, UnresolvedReason::ExternalToFile,
                        "'" + name +
                            "' is a method parameter; its value flows in from callers");
        return {name, false};
      case NameResolution::Kind::FieldInit: {
        const Node& field = unit.node(res.node);
        NodeId init = field.children.back();
        if (expanding.count(res.node)) {
          note_unresolved(name, UnresolvedReason::Cycle,
                          "field initializer cycle through " + name);
          return {name, false};
        }
        expanding.insert(res.node);
        Fragment out = resolve(init, depth + 1);
        expanding.erase(res.node);
        return out;
      }
      case NameResolution::Kind::Unresolved:
        note_unresolved(name, res.reason, res.note);
        return {name, false};
    }
    return {name, false};
  }

  Fragment resolve_field_access(NodeId expr, int depth) {
    const Node& n = unit.node(expr);
    NodeId object = n.children[0];
    const Node& obj = unit.node(object);

    // this.x resolves like the bare field name x.
    if (obj.kind == NodeKind::NameExpr && obj.name == "this") {
      auto ctx_cls = unit.ancestor(expr, [](const Node& a) {
        return a.kind == NodeKind::ClassDecl;
      });
      if (ctx_cls) {
        if (auto field = find_field_outward(unit, *ctx_cls, n.name)) {
          return resolve_found_field(*field, n.name, expr, depth);
        }
      }
      note_unresolved(n.name, UnresolvedReason::ExternalToFile);
      return {verbatim(expr), false};
    }

    if (obj.kind == NodeKind::NameExpr) {
      // ClassName.member where ClassName is declared in this file.
      auto it = classes.find(obj.name);
      if (it != classes.end()) {
        if (auto field = find_field_outward(unit, it->second, n.name)) {
          return resolve_found_field(*field, n.name, expr, depth);
        }
      }
      // An in-file instance whose class declares the field.
      if (!bound.count(obj.name)) {
        if (auto type = declared_type_of(unit, obj.name, object)) {
          auto cls = classes.find(simple_type_name(*type));
          if (cls != classes.end()) {
            if (auto field = find_field_outward(unit, cls->second, n.name)) {
              return resolve_found_field(*field, n.name, expr, depth);
            }
          }
        }
      }
    }

    // External qualified access (AudioManager.STREAM_MUSIC): self-resolved.
    return {verbatim(expr), false};
  }

  Fragment resolve_found_field(NodeId field, const std::string& name,
                               NodeId expr, int depth) {
    if (!unit.node(field).has_init) {
      note_unresolved(name, UnresolvedReason::ExternalToFile,
                      "field '" + name + "' has no initializer");
      return {verbatim(expr), false};
    }
    if (expanding.count(field)) {
      note_unresolved(name, UnresolvedReason::Cycle,
                      "field initializer cycle through " + name);
      return {verbatim(expr), false};
    }
    expanding.insert(field);
    Fragment out = resolve(unit.node(field).children.back(), depth + 1);
    expanding.erase(field);
    return out;
  }

  // Receiver slots treat unresolvable capitalized names as external class
  // references (static scope), which are terminal forms.
  Fragment resolve_receiver(NodeId receiver, int depth) {
    const Node& r = unit.node(receiver);
    if (r.kind == NodeKind::NameExpr && r.name != "this" && r.name != "super" &&
        !bound.count(r.name) && !classes.count(r.name)) {
      NameResolution res = apievolve::flow::resolve_name(unit, r.name, receiver);
      if (res.kind == NameResolution::Kind::Unresolved && !r.name.empty() &&
          std::isupper(static_cast<unsigned char>(r.name[0]))) {
        return {r.name, false};
      }
    }
    return resolve(receiver, depth);
  }

  Fragment resolve_invocation(NodeId expr, int depth) {
    const Node& n = unit.node(expr);
    std::string out;
    std::size_t first_arg = 0;
    if (n.has_receiver) {
      first_arg = 1;
      collect_receiver_class(n.children[0], depth);
      out += guarded(resolve_receiver(n.children[0], depth + 1));
      out += ".";
    } else {
      if (auto m = find_method_for_call(unit, expr, n.name)) {
        collect_method_definition(*m, depth);
      }
    }
    out += n.name;
    out += "(";
    for (std::size_t i = first_arg; i < n.children.size(); ++i) {
      if (i != first_arg) out += ", ";
      out += resolve(n.children[i], depth + 1).text;
    }
    out += ")";
    return {out, false};
  }

  Fragment resolve_creation(NodeId expr, int depth) {
    const Node& n = unit.node(expr);
    auto it = classes.find(simple_type_name(n.name));
    if (it != classes.end()) collect_class_definition(it->second, depth);
    std::string out = "new " + n.name + "(";
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      if (i) out += ", ";
      out += resolve(n.children[i], depth + 1).text;
    }
    out += ")";
    return {out, false};
  }
};

}  // namespace

std::string_view unresolved_reason_name(UnresolvedReason reason) {
  switch (reason) {
    case UnresolvedReason::ExternalToFile: return "external-to-file";
    case UnresolvedReason::AmbiguousAssignment: return "ambiguous-assignment";
    case UnresolvedReason::Cycle: return "cycle";
    case UnresolvedReason::UnsupportedConstruct: return "unsupported-construct";
  }
  return "?";
}

NameResolution resolve_name(const SourceUnit& unit, const std::string& name,
                            NodeId use_site) {
  const Span use_span = unit.node(use_site).span;
  auto method = unit.ancestor(use_site, [](const Node& n) {
    return n.kind == NodeKind::MethodDecl;
  });

  // (1) Textually nearest preceding assignment within the enclosing method
  //     (a local declaration with initializer counts as an assignment).
  if (method) {
    std::vector<NodeId> assignments;
    std::vector<NodeId> bare_decls;
    unit.for_each(
        [&](NodeId id) {
          const Node& n = unit.node(id);
          if (n.span.end > use_span.start) return;
          if (n.kind == NodeKind::AssignExpr && n.name == "=" &&
              unit.node(n.children[0]).kind == NodeKind::NameExpr &&
              unit.node(n.children[0]).name == name) {
            assignments.push_back(id);
          }
          if (n.kind == NodeKind::LocalVarDecl && n.name == name) {
            if (n.has_init) {
              assignments.push_back(id);
            } else {
              bare_decls.push_back(id);
            }
          }
        },
        *method);

    if (!assignments.empty()) {
      // Assignments on the two branches of one preceding IfStmt cannot be
      // ordered soundly; keep the name and report the ambiguity.
      auto branch_of = [&](NodeId a, NodeId if_stmt) -> int {
        const Node& ifs = unit.node(if_stmt);
        Span s = unit.node(a).span;
        if (unit.node(ifs.children[1]).span.contains(s)) return 1;
        if (ifs.has_else && unit.node(ifs.children[2]).span.contains(s)) return 2;
        return 0;
      };
      std::vector<NodeId> guards;
      unit.for_each(
          [&](NodeId id) {
            const Node& n = unit.node(id);
            if (n.kind == NodeKind::IfStmt && n.has_else &&
                n.span.end <= use_span.start) {
              guards.push_back(id);
            }
          },
          *method);
      for (NodeId g : guards) {
        bool in_then = false;
        bool in_else = false;
        for (NodeId a : assignments) {
          int b = branch_of(a, g);
          if (b == 1) in_then = true;
          if (b == 2) in_else = true;
        }
        if (in_then && in_else) {
          NameResolution res;
          res.kind = NameResolution::Kind::Unresolved;
          res.reason = UnresolvedReason::AmbiguousAssignment;
          res.note =
              "'" + name + "' is assigned on both branches of a preceding if";
          return res;
        }
      }
      NodeId nearest = assignments[0];
      for (NodeId a : assignments) {
        if (unit.node(a).span.start > unit.node(nearest).span.start) nearest = a;
      }
      NameResolution res;
      res.kind = NameResolution::Kind::Assignment;
      res.node = nearest;
      return res;
    }

    if (!bare_decls.empty()) {
      NameResolution res;
      res.kind = NameResolution::Kind::Unresolved;
      res.reason = UnresolvedReason::ExternalToFile;
      res.note = "'" + name + "' is declared without an initializer";
      return res;
    }

    // (2) Method parameter.
    for (NodeId c : unit.node(*method).children) {
      if (unit.node(c).kind == NodeKind::Param && unit.node(c).name == name) {
        NameResolution res;
        res.kind = NameResolution::Kind::Parameter;
        res.node = c;
        return res;
      }
    }
  }

  // (3) Field initializer of the enclosing classes, walking outward.
  auto cls = unit.ancestor(use_site, [](const Node& n) {
    return n.kind == NodeKind::ClassDecl;
  });
  if (cls) {
    if (auto field = find_field_outward(unit, *cls, name)) {
      if (unit.node(*field).has_init) {
        NameResolution res;
        res.kind = NameResolution::Kind::FieldInit;
        res.node = *field;
        return res;
      }
      NameResolution res;
      res.kind = NameResolution::Kind::Unresolved;
      res.reason = UnresolvedReason::ExternalToFile;
      res.note = "field '" + name + "' has no initializer";
      return res;
    }
  }

  // (4) Unknown here: defined outside this file.
  NameResolution res;
  res.kind = NameResolution::Kind::Unresolved;
  res.reason = UnresolvedReason::ExternalToFile;
  res.note = "'" + name + "' is not defined in this file";
  return res;
}

ResolvedValue resolve_expression(const SourceUnit& unit, NodeId expr,
                                 std::optional<NodeId> context_method,
                                 const std::set<std::string>& bound_names) {
  (void)context_method;  // context is recovered from the node's ancestry
  Resolver resolver(unit, bound_names);
  resolver.result.expression = resolver.resolve(expr, 0).text;
  return resolver.result;
}

std::vector<Definition> collect_required_definitions(const SourceUnit& unit,
                                                     NodeId expr) {
  Resolver resolver(unit, {});
  resolver.collect_from_subtree(expr, 0);
  return resolver.result.required_definitions;
}

std::optional<std::string> declared_type_of(const SourceUnit& unit,
                                            const std::string& name,
                                            NodeId use_site) {
  auto method = unit.ancestor(use_site, [](const Node& n) {
    return n.kind == NodeKind::MethodDecl;
  });
  if (method) {
    std::optional<NodeId> decl;
    unit.for_each(
        [&](NodeId id) {
          const Node& n = unit.node(id);
          if (n.kind == NodeKind::LocalVarDecl && n.name == name &&
              n.span.start <= unit.node(use_site).span.start) {
            decl = id;
          }
        },
        *method);
    if (decl) return unit.node(*decl).type_text;
    for (NodeId c : unit.node(*method).children) {
      if (unit.node(c).kind == NodeKind::Param && unit.node(c).name == name) {
        return unit.node(c).type_text;
      }
    }
  }
  auto cls = unit.ancestor(use_site, [](const Node& n) {
    return n.kind == NodeKind::ClassDecl;
  });
  if (cls) {
    if (auto field = find_field_outward(unit, *cls, name)) {
      return unit.node(*field).type_text;
    }
  }
  return std::nullopt;
}

std::set<std::string> declared_class_names(const SourceUnit& unit) {
  std::set<std::string> out;
  unit.for_each([&](NodeId id) {
    if (unit.node(id).kind == NodeKind::ClassDecl) out.insert(unit.node(id).name);
  });
  return out;
}

std::string dedent_declaration(const SourceUnit& unit, NodeId decl) {
  Span span = unit.node(decl).span;
  std::string indent = jsrc::indent_at(unit.text, span.start);
  std::string body(unit.text_of(span));
  if (indent.empty()) return body;
  std::string out;
  out.reserve(body.size());
  std::size_t pos = 0;
  bool first = true;
  while (pos <= body.size()) {
    std::size_t nl = body.find('\n', pos);
    std::string line = body.substr(pos, nl == std::string::npos ? std::string::npos
                                                                : nl - pos);
    if (!first && line.rfind(indent, 0) == 0) {
      line = line.substr(indent.size());
    }
    out += line;
    first = false;
    if (nl == std::string::npos) break;
    out += '\n';
    pos = nl + 1;
  }
  return out;
}

}  // namespace apievolve::flow
