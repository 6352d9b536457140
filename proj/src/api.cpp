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

#include "apievolve/api.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "apievolve/errors.hpp"
#include "apievolve/token.hpp"

namespace apievolve {

using jsrc::NodeId;
using jsrc::NodeKind;
using jsrc::SourceUnit;

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

std::string ApiSignature::simple_receiver() const {
  std::size_t dot = receiver_type.rfind('.');
  return dot == std::string::npos ? receiver_type : receiver_type.substr(dot + 1);
}

std::string ApiSignature::to_string() const {
  std::string out;
  if (!receiver_type.empty()) {
    out += receiver_type;
    out += '#';
  }
  out += method;
  out += '(';
  for (std::size_t i = 0; i < param_types.size(); ++i) {
    if (i) out += ',';
    out += param_types[i];
  }
  out += ')';
  return out;
}

ApiSignature parse_signature(const std::string& text) {
  std::string s = trim(text);
  ApiSignature sig;
  std::size_t hash = s.find('#');
  std::size_t lparen = s.find('(');
  if (lparen == std::string::npos || s.back() != ')') {
    throw MappingError("malformed signature: " + s);
  }
  std::size_t name_begin = 0;
  if (hash != std::string::npos && hash < lparen) {
    sig.receiver_type = trim(s.substr(0, hash));
    name_begin = hash + 1;
  }
  sig.method = trim(s.substr(name_begin, lparen - name_begin));
  if (sig.method.empty()) throw MappingError("missing method name: " + s);
  std::string params = s.substr(lparen + 1, s.size() - lparen - 2);
  int angle = 0;
  std::string cur;
  for (char c : params) {
    if (c == '<') ++angle;
    if (c == '>') --angle;
    if (c == ',' && angle == 0) {
      sig.param_types.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty()) sig.param_types.push_back(trim(cur));
  return sig;
}

ApiMapping parse_mapping(const std::string& text) {
  ApiMapping mapping;
  bool saw_deprecated = false;
  bool saw_replacement = false;
  bool saw_level = false;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::size_t colon = t.find(':');
    if (colon == std::string::npos) {
      throw MappingError("malformed mapping line: " + t);
    }
    std::string key = trim(t.substr(0, colon));
    std::string value = trim(t.substr(colon + 1));
    if (key == "deprecated") {
      mapping.deprecated = parse_signature(value);
      saw_deprecated = true;
    } else if (key == "replacement") {
      mapping.replacement = parse_signature(value);
      saw_replacement = true;
    } else if (key == "guard-symbol") {
      mapping.guard_symbol = value;
    } else if (key == "guard-level") {
      try {
        mapping.guard_level = std::stoi(value);
      } catch (const std::exception&) {
        throw MappingError("guard-level is not an integer: " + value);
      }
      saw_level = true;
    } else {
      throw MappingError("unknown mapping key: " + key);
    }
  }
  if (!saw_deprecated || !saw_replacement) {
    throw MappingError("mapping must declare deprecated: and replacement:");
  }
  if (!saw_level || mapping.guard_level < 1) {
    throw MappingError("guard-level must be an integer >= 1");
  }
  if (mapping.guard_symbol.empty()) {
    mapping.guard_symbol = std::to_string(mapping.guard_level);
  }
  return mapping;
}

ApiMapping load_mapping(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MappingError("cannot read mapping file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_mapping(buf.str());
}

std::vector<NodeId> find_invocations(const SourceUnit& unit,
                                     const ApiSignature& signature) {
  std::vector<NodeId> out;
  unit.for_each([&](NodeId id) {
    const jsrc::Node& n = unit.node(id);
    if (n.kind != NodeKind::MethodInvocation) return;
    if (n.name != signature.method) return;
    std::size_t argc = n.children.size() - (n.has_receiver ? 1 : 0);
    if (argc != signature.arity()) return;
    out.push_back(id);
  });
  std::sort(out.begin(), out.end(), [&](NodeId a, NodeId b) {
    return unit.node(a).span.start < unit.node(b).span.start;
  });
  return out;
}

bool is_sdk_guard(const SourceUnit& unit, NodeId if_stmt) {
  const jsrc::Node& n = unit.node(if_stmt);
  if (n.kind != NodeKind::IfStmt) return false;
  std::string_view cond = unit.text_of(n.children.at(0));
  return jsrc::contains_token_sequence(cond, "Build.VERSION.SDK_INT");
}

bool inside_sdk_guard(const SourceUnit& unit, NodeId id) {
  NodeId cur = unit.node(id).parent;
  while (cur != jsrc::kNoNode) {
    if (unit.node(cur).kind == NodeKind::IfStmt && is_sdk_guard(unit, cur)) {
      // The guard condition itself is not "guarded by" the if.
      const jsrc::Node& n = unit.node(cur);
      NodeId cond = n.children.at(0);
      jsrc::Span target = unit.node(id).span;
      if (!unit.node(cond).span.contains(target)) return true;
    }
    cur = unit.node(cur).parent;
  }
  return false;
}

}  // namespace apievolve
