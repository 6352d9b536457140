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

#include "apievolve/script.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "apievolve/errors.hpp"
#include "apievolve/normalize.hpp"
#include "apievolve/parse.hpp"
#include "apievolve/token.hpp"

namespace apievolve::script {

using jsrc::kNoNode;
using jsrc::Node;
using jsrc::NodeId;
using jsrc::NodeKind;
using jsrc::SourceUnit;
using jsrc::Span;

namespace {

const std::map<std::string, int>& version_codes() {
  static const std::map<std::string, int> table = {
      {"BASE", 1},
      {"CUPCAKE", 3},
      {"DONUT", 4},
      {"ECLAIR", 5},
      {"FROYO", 8},
      {"GINGERBREAD", 9},
      {"HONEYCOMB", 11},
      {"ICE_CREAM_SANDWICH", 14},
      {"JELLY_BEAN", 16},
      {"JELLY_BEAN_MR1", 17},
      {"JELLY_BEAN_MR2", 18},
      {"KITKAT", 19},
      {"LOLLIPOP", 21},
      {"LOLLIPOP_MR1", 22},
      {"M", 23},
      {"N", 24},
      {"N_MR1", 25},
      {"O", 26},
      {"O_MR1", 27},
      {"P", 28},
      {"Q", 29},
      {"R", 30},
      {"S", 31},
      {"S_V2", 32},
      {"TIRAMISU", 33},
      {"UPSIDE_DOWN_CAKE", 34},
  };
  return table;
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Names reserved for metavariables; anything matching must be declared.
bool reserved_metavariable_name(const std::string& name) {
  static const std::regex pattern("^(recv|ret|Tr|Tret|[pbeT][0-9]+)$");
  return std::regex_match(name, pattern);
}

std::string canonical(const SourceUnit& unit, NodeId node) {
  return jsrc::canonical_tokens(std::string(unit.text_of(node)));
}

// Rewrites standalone name expressions per `slots`, leaving member accesses
// and string contents alone.
std::string substitute_slots(const std::string& expr_text,
                             const std::map<std::string, std::string>& slots) {
  if (slots.empty()) return expr_text;
  const std::string prefix = "class __S { void __s() { __v = ";
  const std::string suffix = "; } }";
  SourceUnit unit = jsrc::parse(prefix + expr_text + suffix);
  jsrc::EditSet edits;
  unit.for_each([&](NodeId id) {
    const Node& n = unit.node(id);
    if (n.kind != NodeKind::NameExpr) return;
    auto it = slots.find(n.name);
    if (it != slots.end()) edits.add(n.span, it->second);
  });
  std::string out = edits.apply(unit.text);
  return out.substr(prefix.size(), out.size() - prefix.size() - suffix.size());
}

struct CallShape {
  NodeId node = kNoNode;
  std::string receiver_text;  // canonical, empty when absent
  bool has_receiver = false;
  std::vector<NodeId> args;
  bool value_used = false;
};

CallShape shape_of(const SourceUnit& unit, NodeId invocation) {
  CallShape shape;
  shape.node = invocation;
  const Node& n = unit.node(invocation);
  shape.has_receiver = n.has_receiver;
  std::size_t first = 0;
  if (n.has_receiver) {
    first = 1;
    shape.receiver_text = canonical(unit, n.children[0]);
  }
  for (std::size_t i = first; i < n.children.size(); ++i) {
    shape.args.push_back(n.children[i]);
  }
  auto direct = unit.enclosing_statement(invocation);
  shape.value_used = true;
  if (direct) {
    const Node& d = unit.node(*direct);
    shape.value_used =
        !(d.kind == NodeKind::ExprStmt && d.children[0] == invocation);
  }
  return shape;
}

std::optional<NodeId> find_call_in(const SourceUnit& unit, NodeId subtree,
                                   const ApiSignature& sig) {
  std::optional<NodeId> found;
  unit.for_each(
      [&](NodeId id) {
        if (found) return;
        const Node& n = unit.node(id);
        if (n.kind != NodeKind::MethodInvocation) return;
        if (n.name != sig.method) return;
        std::size_t argc = n.children.size() - (n.has_receiver ? 1 : 0);
        if (argc == sig.arity()) found = id;
      },
      subtree);
  return found;
}

// Condition polarity: true when the version-true branch is the then branch.
bool then_branch_is_new(const SourceUnit& unit, NodeId guard) {
  std::string cond(unit.text_of(unit.node(guard).children[0]));
  for (const std::string& t : jsrc::token_texts(cond)) {
    if (t == ">=" || t == ">") return true;
    if (t == "<" || t == "<=") return false;
  }
  return true;
}

std::string sanitize_name(const std::string& raw) {
  std::string out;
  for (char c : raw) {
    out += (std::isalnum(static_cast<unsigned char>(c)) || c == '_') ? c : '_';
  }
  if (out.empty()) out = "update";
  return out;
}

struct ParsedStatementCall {
  bool value_used = false;
  std::string assign_target;  // "ret" when value_used
  NodeId invocation = kNoNode;
};

// Extracts the single call from a pattern/template statement of the shape
// `[ret =] receiver.name(args);`.
std::optional<ParsedStatementCall> statement_call(const SourceUnit& unit,
                                                  NodeId stmt) {
  const Node& s = unit.node(stmt);
  if (s.kind != NodeKind::ExprStmt) return std::nullopt;
  NodeId expr = s.children[0];
  ParsedStatementCall out;
  if (unit.node(expr).kind == NodeKind::AssignExpr) {
    const Node& assign = unit.node(expr);
    if (assign.name != "=") return std::nullopt;
    if (unit.node(assign.children[0]).kind != NodeKind::NameExpr) {
      return std::nullopt;
    }
    out.value_used = true;
    out.assign_target = unit.node(assign.children[0]).name;
    expr = assign.children[1];
  }
  if (unit.node(expr).kind != NodeKind::MethodInvocation) return std::nullopt;
  out.invocation = expr;
  return out;
}

}  // namespace

std::optional<int> sdk_level_for_symbol(const std::string& symbol) {
  std::string s = trim(symbol);
  if (!s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isdigit(c);
      })) {
    return std::stoi(s);
  }
  std::size_t dot = s.rfind('.');
  std::string last = dot == std::string::npos ? s : s.substr(dot + 1);
  auto it = version_codes().find(last);
  if (it == version_codes().end()) return std::nullopt;
  return it->second;
}

bool scripts_structurally_equal(const UpdateScript& a, const UpdateScript& b) {
  return a.name == b.name && a.metavariables == b.metavariables &&
         a.guard_symbol == b.guard_symbol && a.guard_level == b.guard_level &&
         a.match_pattern == b.match_pattern &&
         a.replacement_template == b.replacement_template &&
         a.carried_definitions == b.carried_definitions &&
         a.carried_bindings == b.carried_bindings &&
         a.receiver_type == b.receiver_type &&
         a.return_type == b.return_type && a.param_types == b.param_types;
}

UpdateScript generate_script(const SourceUnit& example,
                             const ApiMapping& mapping) {
  // Locate the version guard holding the deprecated and replacement calls.
  std::vector<NodeId> guards;
  example.for_each([&](NodeId id) {
    if (example.node(id).kind == NodeKind::IfStmt &&
        example.node(id).has_else && is_sdk_guard(example, id)) {
      guards.push_back(id);
    }
  });
  if (guards.empty()) {
    throw GenerateError(GenerateError::Kind::NoGuardFound,
                        "no version guard found in the example");
  }

  bool same_signature = mapping.deprecated.method == mapping.replacement.method &&
                        mapping.deprecated.arity() == mapping.replacement.arity();
  NodeId dep_node = kNoNode;
  NodeId repl_node = kNoNode;
  bool saw_one_sided = false;
  for (NodeId guard : guards) {
    NodeId then_branch = example.node(guard).children[1];
    NodeId else_branch = example.node(guard).children[2];
    if (same_signature) {
      auto in_then = find_call_in(example, then_branch, mapping.deprecated);
      auto in_else = find_call_in(example, else_branch, mapping.deprecated);
      if (in_then && in_else) {
        // Same name and arity on both sides: polarity decides which branch
        // holds the replacement.
        bool new_then = then_branch_is_new(example, guard);
        repl_node = new_then ? *in_then : *in_else;
        dep_node = new_then ? *in_else : *in_then;
        break;
      }
      if (in_then || in_else) saw_one_sided = true;
      continue;
    }
    auto dep_then = find_call_in(example, then_branch, mapping.deprecated);
    auto dep_else = find_call_in(example, else_branch, mapping.deprecated);
    auto repl_then = find_call_in(example, then_branch, mapping.replacement);
    auto repl_else = find_call_in(example, else_branch, mapping.replacement);
    if (dep_then && repl_else && !repl_then) {
      dep_node = *dep_then;
      repl_node = *repl_else;
      break;
    }
    if (dep_else && repl_then && !repl_else) {
      dep_node = *dep_else;
      repl_node = *repl_then;
      break;
    }
    if ((dep_then && dep_else) || (repl_then && repl_else)) {
      saw_one_sided = true;
    }
  }
  if (dep_node == kNoNode || repl_node == kNoNode) {
    if (saw_one_sided) {
      throw GenerateError(
          GenerateError::Kind::BothBranchesSameApi,
          "the guard does not pair the deprecated call with its replacement");
    }
    throw GenerateError(GenerateError::Kind::NoGuardFound,
                        "no version guard found around the API pair");
  }

  CallShape dep = shape_of(example, dep_node);
  CallShape repl = shape_of(example, repl_node);

  UpdateScript out;
  std::string recv_simple = mapping.deprecated.simple_receiver();
  out.name = sanitize_name((recv_simple.empty() ? "" : recv_simple + "_") +
                           mapping.deprecated.method + "_to_" +
                           mapping.replacement.method);
  out.guard_symbol = mapping.guard_symbol;
  out.guard_level = mapping.guard_level;
  out.deprecated_name = mapping.deprecated.method;
  out.deprecated_arity = mapping.deprecated.arity();
  out.replacement_name = mapping.replacement.method;
  out.replacement_arity = mapping.replacement.arity();
  out.return_type.clear();
  out.param_types = mapping.deprecated.param_types;
  out.value_used = dep.value_used;
  out.has_receiver = dep.has_receiver;
  out.receiver_static =
      dep.has_receiver &&
      norm::site_receiver_is_static(example, example.node(dep_node).children[0],
                                    mapping.deprecated.receiver_type);
  if (out.receiver_static) {
    out.static_receiver = dep.receiver_text;
  } else if (dep.has_receiver) {
    out.receiver_type = mapping.deprecated.receiver_type;
  }

  // Bound names: simple-name deprecated arguments and the receiver.
  std::map<std::string, std::string> slots;
  std::vector<std::string> dep_arg_texts;
  for (std::size_t i = 0; i < dep.args.size(); ++i) {
    dep_arg_texts.push_back(canonical(example, dep.args[i]));
    const Node& a = example.node(dep.args[i]);
    if (a.kind == NodeKind::NameExpr && !slots.count(a.name)) {
      slots[a.name] = "p" + std::to_string(i);
    }
  }
  if (dep.has_receiver && !out.receiver_static) {
    const Node& r = example.node(example.node(dep_node).children[0]);
    if (r.kind == NodeKind::NameExpr && !slots.count(r.name)) {
      slots[r.name] = "recv";
    }
  }
  std::set<std::string> bound_names;
  for (const auto& [name, slot] : slots) bound_names.insert(name);

  // Replacement arguments: positional/textual correspondence first, data
  // flow resolution for everything new.
  auto eclosing_method = example.ancestor(repl_node, [](const Node& n) {
    return n.kind == NodeKind::MethodDecl;
  });
  std::vector<std::string> repl_arg_tokens;
  std::vector<CarriedDefinition> defs;
  auto add_defs = [&](const std::vector<flow::Definition>& found) {
    for (const flow::Definition& d : found) {
      CarriedDefinition def;
      def.kind = d.kind;
      def.name = d.name;
      def.text = d.text;
      if (std::find(defs.begin(), defs.end(), def) == defs.end()) {
        defs.push_back(std::move(def));
      }
    }
  };
  int binding_index = 0;
  for (std::size_t i = 0; i < repl.args.size(); ++i) {
    std::string text = canonical(example, repl.args[i]);
    auto match = std::find(dep_arg_texts.begin(), dep_arg_texts.end(), text);
    if (match != dep_arg_texts.end()) {
      repl_arg_tokens.push_back(
          "p" + std::to_string(match - dep_arg_texts.begin()));
      continue;
    }
    flow::ResolvedValue value =
        flow::resolve_expression(example, repl.args[i], eclosing_method,
                                 bound_names);
    if (!value.unresolved.empty()) {
      const auto& [bad_name, reason] = value.unresolved.front();
      throw GenerateError(
          GenerateError::Kind::UnresolvedNewArgument,
          "replacement argument " + std::to_string(i) +
              " depends on unresolved name '" + bad_name + "' (" +
              std::string(flow::unresolved_reason_name(reason)) + ")");
    }
    add_defs(value.required_definitions);
    for (const std::string& d : value.diagnostics) out.diagnostics.push_back(d);
    std::string binding_name = "b" + std::to_string(binding_index++);
    out.carried_bindings.emplace_back(binding_name,
                                      substitute_slots(value.expression, slots));
    repl_arg_tokens.push_back(binding_name);
  }

  // Receiver tokens for the two template calls.
  std::string dep_recv_tok;
  std::string repl_recv_tok;
  if (out.receiver_static) {
    dep_recv_tok = dep.receiver_text;
    repl_recv_tok = repl.has_receiver ? repl.receiver_text : dep.receiver_text;
  } else if (dep.has_receiver) {
    dep_recv_tok = "recv";
    if (repl.has_receiver && repl.receiver_text == dep.receiver_text) {
      repl_recv_tok = "recv";
    } else if (repl.has_receiver) {
      flow::ResolvedValue value = flow::resolve_expression(
          example, example.node(repl_node).children[0], eclosing_method,
          bound_names);
      if (!value.unresolved.empty()) {
        throw GenerateError(GenerateError::Kind::UnresolvedNewArgument,
                            "replacement receiver depends on unresolved name '" +
                                value.unresolved.front().first + "'");
      }
      add_defs(value.required_definitions);
      std::string binding_name = "b" + std::to_string(binding_index++);
      out.carried_bindings.emplace_back(
          binding_name, substitute_slots(value.expression, slots));
      repl_recv_tok = binding_name;
    }
  } else if (repl.has_receiver) {
    repl_recv_tok = repl.receiver_text;
  }
  out.carried_definitions = std::move(defs);

  // Pattern: the normalized deprecated statement.
  std::string dep_args_list;
  for (std::size_t i = 0; i < dep.args.size(); ++i) {
    if (i) dep_args_list += ", ";
    dep_args_list += "p" + std::to_string(i);
  }
  auto call_stmt = [&](const std::string& recv_tok, const std::string& method,
                       const std::string& args, bool with_ret) {
    std::string line;
    if (with_ret) line += "ret = ";
    if (!recv_tok.empty()) line += recv_tok + ".";
    line += method + "(" + args + ");";
    return line;
  };
  out.match_pattern = {call_stmt(dep_recv_tok, mapping.deprecated.method,
                                 dep_args_list, dep.value_used)};

  std::string repl_args_list;
  for (std::size_t i = 0; i < repl_arg_tokens.size(); ++i) {
    if (i) repl_args_list += ", ";
    repl_args_list += repl_arg_tokens[i];
  }
  out.replacement_template = {
      "if (android.os.Build.VERSION.SDK_INT >= " + out.guard_symbol + ") {",
      "    " + call_stmt(repl_recv_tok, mapping.replacement.method,
                         repl_args_list, dep.value_used),
      "} else {",
      "    " + call_stmt(dep_recv_tok, mapping.deprecated.method,
                         dep_args_list, dep.value_used),
      "}",
  };

  // Return type, recovered from the example's use site.
  if (dep.value_used) {
    norm::NormalizeTypes probe;
    probe.receiver_type = mapping.deprecated.receiver_type;
    probe.param_types = mapping.deprecated.param_types;
    probe.receiver_static = out.receiver_static;
    // The use-site type resolution lives in the normalizer; run it on a
    // throwaway copy and read the declared type off the temp it makes.
    auto normalized = norm::normalize_invocation(example, dep_node, probe);
    for (const auto& temp : normalized.record.introduced) {
      if (temp.name.rfind("tempFunctionReturnValue", 0) == 0) {
        std::string decl(normalized.unit.text_of(temp.decl_span));
        std::size_t space = decl.find(' ');
        if (space != std::string::npos) {
          out.return_type = trim(decl.substr(0, space));
        }
      }
    }
  }

  // Metavariables in canonical order.
  for (std::size_t i = 0; i < dep.args.size(); ++i) {
    out.metavariables.push_back(
        {Metavariable::Kind::Identifier, "p" + std::to_string(i)});
  }
  if (dep.has_receiver && !out.receiver_static) {
    out.metavariables.push_back({Metavariable::Kind::Identifier, "recv"});
  }
  if (dep.value_used) {
    out.metavariables.push_back({Metavariable::Kind::Identifier, "ret"});
  }
  for (std::size_t i = 0; i < out.param_types.size(); ++i) {
    if (!out.param_types[i].empty()) {
      out.metavariables.push_back(
          {Metavariable::Kind::Type, "T" + std::to_string(i)});
    }
  }
  if (!out.receiver_type.empty() && dep.has_receiver && !out.receiver_static) {
    out.metavariables.push_back({Metavariable::Kind::Type, "Tr"});
  }
  if (!out.return_type.empty() && dep.value_used) {
    out.metavariables.push_back({Metavariable::Kind::Type, "Tret"});
  }
  for (const auto& [name, expr] : out.carried_bindings) {
    out.metavariables.push_back({Metavariable::Kind::Expression, name});
  }

  return out;
}

std::string serialize_script(const UpdateScript& script) {
  std::ostringstream out;
  out << "@" << script.name << "@\n";
  for (const Metavariable& m : script.metavariables) {
    switch (m.kind) {
      case Metavariable::Kind::Expression: out << "expression "; break;
      case Metavariable::Kind::Identifier: out << "identifier "; break;
      case Metavariable::Kind::Type: out << "type "; break;
    }
    out << m.name << ";\n";
  }
  out << "@@\n";
  for (const std::string& line : script.match_pattern) {
    out << "- " << line << "\n";
  }
  for (const std::string& line : script.replacement_template) {
    out << "+ " << line << "\n";
  }
  if (!script.carried_definitions.empty()) {
    out << "@defs@\n";
    for (std::size_t i = 0; i < script.carried_definitions.size(); ++i) {
      if (i) out << "\n";
      out << script.carried_definitions[i].text << "\n";
    }
  }
  bool any_binding = !script.carried_bindings.empty() ||
                     !script.return_type.empty() ||
                     !script.receiver_type.empty() ||
                     std::any_of(script.param_types.begin(),
                                 script.param_types.end(),
                                 [](const std::string& t) { return !t.empty(); });
  // Only serialize type bindings that have matching metavariables.
  auto declared = [&](const std::string& name) {
    for (const Metavariable& m : script.metavariables) {
      if (m.name == name) return true;
    }
    return false;
  };
  if (any_binding) {
    std::ostringstream binds;
    for (std::size_t i = 0; i < script.param_types.size(); ++i) {
      std::string name = "T" + std::to_string(i);
      if (!script.param_types[i].empty() && declared(name)) {
        binds << name << " = " << script.param_types[i] << ";\n";
      }
    }
    if (!script.receiver_type.empty() && declared("Tr")) {
      binds << "Tr = " << script.receiver_type << ";\n";
    }
    if (!script.return_type.empty() && declared("Tret")) {
      binds << "Tret = " << script.return_type << ";\n";
    }
    for (const auto& [name, expr] : script.carried_bindings) {
      binds << name << " = " << expr << ";\n";
    }
    std::string body = binds.str();
    if (!body.empty()) out << "@bind@\n" << body;
  }
  return out.str();
}

UpdateScript parse_script(const std::string& text) {
  std::vector<std::string> lines;
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
  }
  UpdateScript script;
  std::size_t i = 0;
  auto syntax_error = [&](const std::string& message, std::size_t line_no)
      -> ScriptSyntaxError { return ScriptSyntaxError(message, line_no + 1); };

  while (i < lines.size() && trim(lines[i]).empty()) ++i;
  if (i >= lines.size() || lines[i].size() < 3 || lines[i].front() != '@' ||
      trim(lines[i]).back() != '@') {
    throw syntax_error("expected @name@ header", i);
  }
  {
    std::string header = trim(lines[i]);
    script.name = header.substr(1, header.size() - 2);
    ++i;
  }

  // Metavariable declarations until @@.
  bool saw_separator = false;
  for (; i < lines.size(); ++i) {
    std::string line = trim(lines[i]);
    if (line.empty()) continue;
    if (line == "@@") {
      saw_separator = true;
      ++i;
      break;
    }
    static const std::regex decl("^(expression|identifier|type)\\s+([A-Za-z_$][A-Za-z0-9_$]*)\\s*;$");
    std::smatch m;
    if (!std::regex_match(line, m, decl)) {
      throw syntax_error("malformed metavariable declaration: " + line, i);
    }
    Metavariable mv;
    if (m[1] == "expression") mv.kind = Metavariable::Kind::Expression;
    if (m[1] == "identifier") mv.kind = Metavariable::Kind::Identifier;
    if (m[1] == "type") mv.kind = Metavariable::Kind::Type;
    mv.name = m[2];
    script.metavariables.push_back(mv);
  }
  if (!saw_separator) {
    throw ScriptSyntaxError("missing @@ separator", lines.size());
  }

  auto declared = [&](const std::string& name) {
    for (const Metavariable& m : script.metavariables) {
      if (m.name == name) return true;
    }
    return false;
  };
  auto declared_kind = [&](const std::string& name,
                           Metavariable::Kind kind) {
    for (const Metavariable& m : script.metavariables) {
      if (m.name == name && m.kind == kind) return true;
    }
    return false;
  };
  auto check_undeclared = [&](const std::string& java_text) {
    for (const std::string& tok : jsrc::token_texts(java_text)) {
      if (reserved_metavariable_name(tok) && !declared(tok)) {
        throw UndeclaredMetavariable(tok);
      }
    }
  };

  // Pattern and template lines.
  for (; i < lines.size(); ++i) {
    const std::string& raw = lines[i];
    std::string t = trim(raw);
    if (t.empty()) continue;
    if (t == "@defs@" || t == "@bind@") break;
    if (raw.rfind("- ", 0) == 0 || raw == "-") {
      script.match_pattern.push_back(raw.size() > 2 ? raw.substr(2) : "");
    } else if (raw.rfind("-", 0) == 0) {
      script.match_pattern.push_back(raw.substr(1));
    } else if (raw.rfind("+ ", 0) == 0 || raw == "+") {
      script.replacement_template.push_back(raw.size() > 2 ? raw.substr(2) : "");
    } else if (raw.rfind("+", 0) == 0) {
      script.replacement_template.push_back(raw.substr(1));
    } else {
      throw syntax_error("expected '-' or '+' line: " + t, i);
    }
  }

  // @defs@ section, verbatim until @bind@.
  if (i < lines.size() && trim(lines[i]) == "@defs@") {
    ++i;
    std::vector<std::string> defs_lines;
    for (; i < lines.size(); ++i) {
      if (trim(lines[i]) == "@bind@") break;
      defs_lines.push_back(lines[i]);
    }
    while (!defs_lines.empty() && trim(defs_lines.back()).empty()) {
      defs_lines.pop_back();
    }
    std::string defs_text;
    for (const std::string& l : defs_lines) defs_text += l + "\n";
    if (!trim(defs_text).empty()) {
      std::string wrapped = "class __DefsWrapper {\n" + defs_text + "}\n";
      SourceUnit unit;
      try {
        unit = jsrc::parse(wrapped, "<defs>");
      } catch (const ParseError& e) {
        throw ScriptSyntaxError(std::string("unparsable @defs@ section: ") +
                                    e.what(),
                                i);
      }
      NodeId wrapper = unit.node(unit.root).children.at(0);
      for (NodeId member : unit.node(wrapper).children) {
        const Node& m = unit.node(member);
        CarriedDefinition def;
        if (m.kind == NodeKind::ClassDecl) {
          def.kind = flow::Definition::Kind::Class;
        } else if (m.kind == NodeKind::MethodDecl) {
          def.kind = flow::Definition::Kind::Method;
        } else {
          throw syntax_error("only method and class definitions may appear in @defs@", i);
        }
        def.name = m.name;
        def.text = flow::dedent_declaration(unit, member);
        script.carried_definitions.push_back(std::move(def));
      }
    }
  }

  // @bind@ section.
  if (i < lines.size() && trim(lines[i]) == "@bind@") {
    ++i;
    static const std::regex bind("^([A-Za-z_$][A-Za-z0-9_$]*)\\s*=\\s*(.*);\\s*$");
    for (; i < lines.size(); ++i) {
      std::string line = trim(lines[i]);
      if (line.empty()) continue;
      std::smatch m;
      if (!std::regex_match(line, m, bind)) {
        throw syntax_error("malformed binding: " + line, i);
      }
      std::string name = m[1];
      std::string value = trim(std::string(m[2]));
      if (!declared(name)) throw UndeclaredMetavariable(name);
      if (declared_kind(name, Metavariable::Kind::Type)) {
        if (name == "Tr") {
          script.receiver_type = value;
        } else if (name == "Tret") {
          script.return_type = value;
        } else if (name.size() > 1 && name[0] == 'T') {
          std::size_t index = std::stoul(name.substr(1));
          if (script.param_types.size() <= index) {
            script.param_types.resize(index + 1);
          }
          script.param_types[index] = value;
        }
      } else {
        check_undeclared(value);
        script.carried_bindings.emplace_back(name, value);
      }
    }
  }

  if (script.match_pattern.empty()) {
    throw ScriptSyntaxError("script has no pattern line", 1);
  }
  if (script.replacement_template.empty()) {
    throw ScriptSyntaxError("script has no template block", 1);
  }
  for (const std::string& l : script.match_pattern) check_undeclared(l);
  for (const std::string& l : script.replacement_template) check_undeclared(l);

  // Derive the deprecated call shape from the pattern.
  {
    std::string joined;
    for (const std::string& l : script.match_pattern) joined += l + "\n";
    SourceUnit unit;
    try {
      unit = jsrc::parse_statements_snippet(joined);
    } catch (const ParseError& e) {
      throw ScriptSyntaxError(std::string("unparsable pattern: ") + e.what(), 1);
    }
    NodeId block = jsrc::body_block(unit);
    const Node& b = unit.node(block);
    if (b.children.empty()) throw ScriptSyntaxError("empty pattern", 1);
    auto call = statement_call(unit, b.children.back());
    if (!call || (call->value_used && call->assign_target != "ret")) {
      throw ScriptSyntaxError("pattern is not a normalized call statement", 1);
    }
    script.value_used = call->value_used;
    const Node& inv = unit.node(call->invocation);
    script.deprecated_name = inv.name;
    std::size_t first = 0;
    script.has_receiver = inv.has_receiver;
    if (inv.has_receiver) {
      first = 1;
      NodeId recv = inv.children[0];
      std::string recv_text = canonical(unit, recv);
      if (recv_text == "recv") {
        script.receiver_static = false;
      } else {
        script.receiver_static = true;
        script.static_receiver = recv_text;
      }
    }
    script.deprecated_arity = inv.children.size() - first;
    for (std::size_t a = first; a < inv.children.size(); ++a) {
      const Node& arg = unit.node(inv.children[a]);
      if (arg.kind != NodeKind::NameExpr ||
          arg.name != "p" + std::to_string(a - first)) {
        throw ScriptSyntaxError("pattern arguments must be p0..pN in order", 1);
      }
    }
  }

  // Derive the guard and replacement shape from the template.
  {
    std::string joined;
    for (const std::string& l : script.replacement_template) joined += l + "\n";
    SourceUnit unit;
    try {
      unit = jsrc::parse_statements_snippet(joined);
    } catch (const ParseError& e) {
      throw ScriptSyntaxError(std::string("unparsable template: ") + e.what(), 1);
    }
    NodeId block = jsrc::body_block(unit);
    std::vector<NodeId> stmts = unit.node(block).children;
    if (stmts.size() != 1 || unit.node(stmts[0]).kind != NodeKind::IfStmt ||
        !unit.node(stmts[0]).has_else) {
      throw ScriptSyntaxError("template must be exactly one if/else guard", 1);
    }
    NodeId guard = stmts[0];
    if (!is_sdk_guard(unit, guard)) {
      throw ScriptSyntaxError("template guard does not test Build.VERSION.SDK_INT", 1);
    }
    // Guard symbol: the tokens after >= up to the closing parenthesis.
    {
      std::string cond(unit.text_of(unit.node(guard).children[0]));
      std::vector<std::string> toks = jsrc::token_texts(cond);
      std::size_t ge = 0;
      bool found = false;
      for (std::size_t k = 0; k < toks.size(); ++k) {
        if (toks[k] == ">=" || toks[k] == ">" || toks[k] == "<" ||
            toks[k] == "<=") {
          ge = k;
          found = true;
          break;
        }
      }
      if (!found) {
        throw ScriptSyntaxError("guard condition has no comparison", 1);
      }
      std::vector<std::string> rhs(toks.begin() + ge + 1, toks.end());
      script.guard_symbol = jsrc::join_tokens(rhs);
      auto level = sdk_level_for_symbol(script.guard_symbol);
      if (!level) {
        throw ScriptSyntaxError("unknown SDK level symbol: " + script.guard_symbol, 1);
      }
      script.guard_level = *level;
    }
    // Branch calls.
    auto branch_call = [&](NodeId branch) -> std::optional<ParsedStatementCall> {
      const Node& b = unit.node(branch);
      if (b.kind == NodeKind::Block) {
        if (b.children.size() != 1) return std::nullopt;
        return statement_call(unit, b.children[0]);
      }
      return statement_call(unit, branch);
    };
    auto then_call = branch_call(unit.node(guard).children[1]);
    auto else_call = branch_call(unit.node(guard).children[2]);
    if (!then_call || !else_call) {
      throw ScriptSyntaxError("each guard branch must hold exactly one call", 1);
    }
    auto arity_of = [&](NodeId inv) {
      const Node& n = unit.node(inv);
      return n.children.size() - (n.has_receiver ? 1 : 0);
    };
    const Node& else_inv = unit.node(else_call->invocation);
    bool else_is_dep = else_inv.name == script.deprecated_name &&
                       arity_of(else_call->invocation) == script.deprecated_arity;
    const Node& then_inv = unit.node(then_call->invocation);
    bool then_is_dep = then_inv.name == script.deprecated_name &&
                       arity_of(then_call->invocation) == script.deprecated_arity;
    if (!else_is_dep && !then_is_dep) {
      throw ScriptSyntaxError("deprecated call missing from the template", 1);
    }
    // Fixed branch order: the replacement lives in the version-true branch.
    NodeId repl_inv = then_call->invocation;
    if (!then_is_dep && else_is_dep) {
      repl_inv = then_call->invocation;
    } else if (then_is_dep && !else_is_dep) {
      throw ScriptSyntaxError(
          "replacement call must sit in the version-true branch", 1);
    }
    script.replacement_name = unit.node(repl_inv).name;
    script.replacement_arity = arity_of(repl_inv);
  }

  return script;
}

}  // namespace apievolve::script
