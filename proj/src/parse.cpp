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

#include "apievolve/parse.hpp"

#include <algorithm>
#include <cctype>
#include <initializer_list>
#include <optional>
#include <set>
#include <utility>

#include "apievolve/errors.hpp"
#include "apievolve/token.hpp"

namespace apievolve::jsrc {

namespace {

const std::set<std::string_view> kModifierKeywords = {
    "public", "private",  "protected", "static",    "final",
    "abstract", "native", "synchronized", "transient", "volatile",
    "strictfp", "default",
};

const std::set<std::string_view> kOpaqueStatementKeywords = {
    "for",   "while", "do",       "switch",  "try",   "throw",
    "break", "continue", "assert", "synchronized", "yield",
};

const std::set<std::string_view> kAssignOps = {
    "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=",
};

// Tokens permitted inside generic type arguments; anything else means the
// angle bracket was a less-than comparison.
bool type_argument_token(Token::Kind kind, std::string_view text) {
  if (kind == Token::Kind::Identifier) return true;
  if (kind != Token::Kind::Punct) return false;
  return text == "." || text == "," || text == "?" || text == "<" ||
         text == ">" || text == "[" || text == "]" || text == "&";
}

class Parser {
 public:
  Parser(std::string text, std::string path)
      : text_(std::move(text)), path_(std::move(path)) {
    TokenStream ts = tokenize(text_);
    tokens_ = std::move(ts.tokens);
    comments_ = std::move(ts.comments);
  }

  SourceUnit run() {
    NodeId root = parse_unit();
    SourceUnit unit;
    unit.path = std::move(path_);
    unit.text = std::move(text_);
    unit.nodes = std::move(nodes_);
    unit.root = root;
    unit.comments = std::move(comments_);
    return unit;
  }

 private:
  struct Mark {
    std::size_t tok;
    std::size_t nodes;
  };

  // ---- token helpers -------------------------------------------------

  const Token& cur() const { return tokens_[pos_]; }
  const Token& ahead(std::size_t k) const {
    std::size_t i = std::min(pos_ + k, tokens_.size() - 1);
    return tokens_[i];
  }
  std::string_view tok_text(const Token& t) const { return t.text(text_); }
  std::string_view cur_text() const { return tok_text(cur()); }
  bool at_end() const { return cur().kind == Token::Kind::End; }
  bool at(std::string_view s) const { return !at_end() && cur_text() == s; }
  bool at_ident() const { return cur().kind == Token::Kind::Identifier; }
  void advance() {
    if (!at_end()) ++pos_;
  }
  bool accept(std::string_view s) {
    if (at(s)) {
      advance();
      return true;
    }
    return false;
  }
  void expect(std::string_view s, const char* what) {
    if (!accept(s)) fail(cur(), std::string("expected '") + std::string(s) + "' in " + what);
  }

  [[noreturn]] void fail(const Token& t, std::string message) const {
    auto [line, col] = line_column(text_, t.span.start);
    throw ParseError(std::move(message), line, col);
  }

  Mark mark() const { return Mark{pos_, nodes_.size()}; }
  void rewind(Mark m) {
    pos_ = m.tok;
    nodes_.resize(m.nodes);
  }

  // ---- node builders --------------------------------------------------

  NodeId add(NodeKind kind) {
    nodes_.push_back(Node{});
    nodes_.back().kind = kind;
    return static_cast<NodeId>(nodes_.size() - 1);
  }

  void adopt(NodeId parent, NodeId child) {
    nodes_[parent].children.push_back(child);
    nodes_[child].parent = parent;
  }

  Span span_since(std::size_t start_tok) const {
    if (pos_ == 0 || start_tok >= pos_) {
      std::size_t at = tokens_[start_tok].span.start;
      return Span{at, at};
    }
    return Span{tokens_[start_tok].span.start, tokens_[pos_ - 1].span.end};
  }

  // ---- compilation unit ----------------------------------------------

  NodeId parse_unit() {
    NodeId cu = add(NodeKind::CompilationUnit);
    while (!at_end()) {
      if (at("package")) {
        adopt(cu, opaque_statement());
      } else if (at("import")) {
        adopt(cu, parse_import());
      } else if (at(";")) {
        std::size_t start = pos_;
        advance();
        NodeId n = add(NodeKind::OpaqueStmt);
        nodes_[n].span = span_since(start);
        adopt(cu, n);
      } else {
        adopt(cu, parse_type_decl_or_opaque());
      }
    }
    nodes_[cu].span = Span{0, text_.size()};
    return cu;
  }

  NodeId parse_import() {
    std::size_t start = pos_;
    expect("import", "import declaration");
    bool is_static = accept("static");
    std::string name;
    if (!at_ident()) fail(cur(), "expected name after import");
    name += cur_text();
    advance();
    while (accept(".")) {
      name += '.';
      if (accept("*")) {
        name += '*';
        break;
      }
      if (!at_ident()) fail(cur(), "expected name in import");
      name += cur_text();
      advance();
    }
    expect(";", "import declaration");
    NodeId n = add(NodeKind::Import);
    nodes_[n].span = span_since(start);
    nodes_[n].name = std::move(name);
    nodes_[n].is_static = is_static;
    return n;
  }

  struct Mods {
    std::size_t first_tok;
    Span access;
    bool has_access = false;
    bool is_static = false;
  };

  Mods scan_modifiers() {
    Mods mods{pos_, Span{cur().span.start, cur().span.start}, false, false};
    while (true) {
      if (at("@") && ahead(1).kind == Token::Kind::Identifier &&
          tok_text(ahead(1)) != "interface") {
        advance();
        advance();
        while (at(".") && ahead(1).kind == Token::Kind::Identifier) {
          advance();
          advance();
        }
        if (at("(")) skip_balanced_parens();
        continue;
      }
      if (at_ident() && kModifierKeywords.count(cur_text())) {
        std::string_view t = cur_text();
        if (t == "public" || t == "private" || t == "protected") {
          mods.access = cur().span;
          mods.has_access = true;
        }
        if (t == "static") mods.is_static = true;
        advance();
        continue;
      }
      break;
    }
    if (!mods.has_access) {
      // Insertion point for an access modifier: before the next token.
      mods.access = Span{cur().span.start, cur().span.start};
    }
    return mods;
  }

  void skip_balanced_parens() {
    int depth = 0;
    while (!at_end()) {
      if (at("(") || at("[") || at("{")) ++depth;
      if (at(")") || at("]") || at("}")) --depth;
      advance();
      if (depth == 0) return;
    }
    fail(cur(), "unbalanced parentheses");
  }

  NodeId parse_type_decl_or_opaque() {
    Mark m = mark();
    Mods mods = scan_modifiers();
    if (at("class")) return parse_class(mods, m);
    rewind(m);
    return opaque_statement();
  }

  NodeId parse_class(const Mods& mods, Mark start_mark) {
    std::size_t start_tok = start_mark.tok;
    expect("class", "class declaration");
    if (!at_ident()) fail(cur(), "expected class name");
    std::string name(cur_text());
    advance();
    if (at("<")) skip_type_arguments_or_fail();
    // extends / implements clauses up to the body.
    while (!at("{")) {
      if (at_end()) fail(cur(), "truncated class declaration");
      if (at("<")) {
        skip_type_arguments_or_fail();
        continue;
      }
      advance();
    }
    NodeId cls = add(NodeKind::ClassDecl);
    nodes_[cls].name = std::move(name);
    nodes_[cls].access_span = mods.access;
    nodes_[cls].has_access = mods.has_access;
    nodes_[cls].is_static = mods.is_static;
    expect("{", "class body");
    while (!at("}")) {
      if (at_end()) fail(tokens_[start_tok], "unbalanced class body");
      adopt(cls, parse_member(nodes_[cls].name));
    }
    expect("}", "class body");
    nodes_[cls].span = span_since(start_tok);
    return cls;
  }

  void skip_type_arguments_or_fail() {
    // Balanced angle brackets containing only type-ish tokens.
    std::size_t start = pos_;
    int depth = 0;
    while (!at_end()) {
      if (at("<")) {
        ++depth;
        advance();
        continue;
      }
      if (at(">")) {
        --depth;
        advance();
        if (depth == 0) return;
        continue;
      }
      if (!type_argument_token(cur().kind, cur_text())) {
        fail(tokens_[start], "malformed type arguments");
      }
      advance();
    }
    fail(tokens_[start], "unbalanced type arguments");
  }

  // Type = qualified name, optional generic arguments, optional [].
  // Returns the source text of the type, or nullopt (position restored).
  std::optional<std::string> try_parse_type() {
    Mark m = mark();
    if (!at_ident() || kOpaqueStatementKeywords.count(cur_text()) ||
        cur_text() == "new" || cur_text() == "return" || cur_text() == "if" ||
        cur_text() == "else" || cur_text() == "this" || cur_text() == "super" ||
        cur_text() == "instanceof" || cur_text() == "true" ||
        cur_text() == "false" || cur_text() == "null") {
      return std::nullopt;
    }
    std::size_t start_tok = pos_;
    advance();
    while (at(".") && ahead(1).kind == Token::Kind::Identifier) {
      advance();
      advance();
    }
    if (at("<")) {
      // Validate before committing: reject when the contents do not look
      // like type arguments (e.g. `a < b && c > d`).
      std::size_t probe = pos_;
      int depth = 0;
      bool ok = false;
      while (probe < tokens_.size() && tokens_[probe].kind != Token::Kind::End) {
        std::string_view t = tok_text(tokens_[probe]);
        if (t == "<") {
          ++depth;
          ++probe;
          continue;
        }
        if (t == ">") {
          --depth;
          ++probe;
          if (depth == 0) {
            ok = true;
            break;
          }
          continue;
        }
        if (!type_argument_token(tokens_[probe].kind, t)) break;
        ++probe;
      }
      if (!ok) {
        rewind(m);
        return std::nullopt;
      }
      pos_ = probe;
    }
    while (at("[") && tok_text(ahead(1)) == "]") {
      advance();
      advance();
    }
    if (at("...")) advance();  // varargs fold into the type text
    Span s = span_since(start_tok);
    return std::string(text_.substr(s.start, s.size()));
  }

  NodeId parse_member(const std::string& class_name) {
    if (at(";")) {
      std::size_t start = pos_;
      advance();
      NodeId n = add(NodeKind::OpaqueStmt);
      nodes_[n].span = span_since(start);
      return n;
    }
    Mark m = mark();
    Mods mods = scan_modifiers();
    if (at("class")) return parse_class(mods, m);
    if (at("{") || at("interface") || at("enum") || at("@")) {
      rewind(m);
      return opaque_statement();
    }
    // Constructor: ClassName(
    if (at_ident() && cur_text() == class_name && tok_text(ahead(1)) == "(") {
      std::string name(cur_text());
      advance();
      return parse_method_rest(mods, m, "", std::move(name), true);
    }
    std::optional<std::string> type = try_parse_type();
    if (type && at_ident()) {
      std::string name(cur_text());
      advance();
      if (at("(")) {
        return parse_method_rest(mods, m, *type, std::move(name), false);
      }
      if (at("=") || at(";")) {
        return parse_field_rest(mods, m, *type, std::move(name));
      }
    }
    rewind(m);
    return opaque_statement();
  }

  NodeId parse_method_rest(const Mods& mods, Mark start_mark,
                           std::string return_type, std::string name,
                           bool is_ctor) {
    NodeId method = add(NodeKind::MethodDecl);
    nodes_[method].name = std::move(name);
    nodes_[method].type_text = std::move(return_type);
    nodes_[method].is_constructor = is_ctor;
    nodes_[method].is_static = mods.is_static;
    nodes_[method].access_span = mods.access;
    nodes_[method].has_access = mods.has_access;
    expect("(", "parameter list");
    if (!at(")")) {
      while (true) {
        adopt(method, parse_param());
        if (!accept(",")) break;
      }
    }
    expect(")", "parameter list");
    if (accept("throws")) {
      while (at_ident()) {
        advance();
        while (at(".") && ahead(1).kind == Token::Kind::Identifier) {
          advance();
          advance();
        }
        if (!accept(",")) break;
      }
    }
    if (at("{")) {
      adopt(method, parse_block());
    } else {
      expect(";", "method declaration");
    }
    nodes_[method].span = span_since(start_mark.tok);
    return method;
  }

  NodeId parse_param() {
    std::size_t start_tok = pos_;
    while (at("@") && ahead(1).kind == Token::Kind::Identifier) {
      advance();
      advance();
      if (at("(")) skip_balanced_parens();
    }
    accept("final");
    std::optional<std::string> type = try_parse_type();
    if (!type || !at_ident()) fail(cur(), "malformed parameter");
    NodeId p = add(NodeKind::Param);
    nodes_[p].type_text = *type;
    nodes_[p].name = std::string(cur_text());
    advance();
    while (at("[") && tok_text(ahead(1)) == "]") {
      advance();
      advance();
    }
    nodes_[p].span = span_since(start_tok);
    return p;
  }

  NodeId parse_field_rest(const Mods& mods, Mark start_mark, std::string type,
                          std::string name) {
    NodeId field = add(NodeKind::FieldDecl);
    nodes_[field].name = std::move(name);
    nodes_[field].type_text = std::move(type);
    nodes_[field].is_static = mods.is_static;
    nodes_[field].access_span = mods.access;
    nodes_[field].has_access = mods.has_access;
    if (accept("=")) {
      NodeId init = expr_or_opaque({";", ","});
      if (!at(";")) {
        // Multi-declarator fields fall outside the subset.
        rewind(start_mark);
        return opaque_statement();
      }
      adopt(field, init);
      nodes_[field].has_init = true;
    }
    if (!accept(";")) {
      rewind(start_mark);
      return opaque_statement();
    }
    nodes_[field].span = span_since(start_mark.tok);
    return field;
  }

  // ---- statements -----------------------------------------------------

  NodeId parse_block() {
    std::size_t start_tok = pos_;
    expect("{", "block");
    NodeId block = add(NodeKind::Block);
    while (!at("}")) {
      if (at_end()) fail(tokens_[start_tok], "unbalanced block");
      adopt(block, parse_statement());
    }
    expect("}", "block");
    nodes_[block].span = span_since(start_tok);
    return block;
  }

  NodeId parse_statement() {
    if (at("{")) return parse_block();
    if (at("if")) return parse_if();
    if (at("return")) return parse_return();
    if (at_ident() && kOpaqueStatementKeywords.count(cur_text())) {
      return opaque_statement();
    }
    if (at(";")) {
      std::size_t start = pos_;
      advance();
      NodeId n = add(NodeKind::OpaqueStmt);
      nodes_[n].span = span_since(start);
      return n;
    }
    return parse_local_or_expr_statement();
  }

  NodeId parse_if() {
    std::size_t start_tok = pos_;
    expect("if", "if statement");
    expect("(", "if condition");
    NodeId cond = expr_or_opaque({")"});
    expect(")", "if condition");
    NodeId then_stmt = parse_statement();
    NodeId node = add(NodeKind::IfStmt);
    adopt(node, cond);
    adopt(node, then_stmt);
    if (accept("else")) {
      adopt(node, parse_statement());
      nodes_[node].has_else = true;
    }
    nodes_[node].span = span_since(start_tok);
    return node;
  }

  NodeId parse_return() {
    std::size_t start_tok = pos_;
    expect("return", "return statement");
    NodeId node = add(NodeKind::ReturnStmt);
    if (!at(";")) {
      adopt(node, expr_or_opaque({";"}));
    }
    expect(";", "return statement");
    nodes_[node].span = span_since(start_tok);
    return node;
  }

  NodeId parse_local_or_expr_statement() {
    Mark m = mark();
    accept("final");
    while (at("@") && ahead(1).kind == Token::Kind::Identifier) {
      advance();
      advance();
      if (at("(")) skip_balanced_parens();
    }
    std::optional<std::string> type = try_parse_type();
    if (type && at_ident()) {
      std::string name(cur_text());
      advance();
      if (at(";") || at("=")) {
        NodeId decl = add(NodeKind::LocalVarDecl);
        nodes_[decl].name = std::move(name);
        nodes_[decl].type_text = *type;
        bool ok = true;
        if (accept("=")) {
          NodeId init = expr_or_opaque({";", ","});
          if (at(";")) {
            adopt(decl, init);
            nodes_[decl].has_init = true;
          } else {
            ok = false;  // multi-declarator or malformed
          }
        }
        if (ok && accept(";")) {
          nodes_[decl].span = span_since(m.tok);
          return decl;
        }
      }
    }
    rewind(m);
    std::optional<NodeId> expr = parse_expression();
    if (expr && at(";")) {
      if (contains_opaque(*expr)) {
        rewind(m);
        return opaque_statement();
      }
      advance();
      NodeId stmt = add(NodeKind::ExprStmt);
      adopt(stmt, *expr);
      nodes_[stmt].span = span_since(m.tok);
      return stmt;
    }
    rewind(m);
    return opaque_statement();
  }

  bool contains_opaque(NodeId id) const {
    if (nodes_[id].kind == NodeKind::OpaqueExpr) return true;
    for (NodeId c : nodes_[id].children) {
      if (contains_opaque(c)) return true;
    }
    return false;
  }

  // Balanced-delimiter capture of one statement-shaped region.
  NodeId opaque_statement() {
    std::size_t start_tok = pos_;
    int depth = 0;
    std::size_t last_opener = pos_;
    while (true) {
      if (at_end()) {
        if (depth > 0) fail(tokens_[last_opener], "unbalanced delimiter");
        if (pos_ == start_tok) fail(cur(), "unexpected end of input");
        fail(tokens_[start_tok], "truncated declaration");
      }
      std::string_view t = cur_text();
      if (t == "(" || t == "[" || t == "{") {
        ++depth;
        last_opener = pos_;
        advance();
        continue;
      }
      if (t == ")" || t == "]" || t == "}") {
        if (depth == 0) {
          // Closes an enclosing scope: the statement ends here.
          if (pos_ == start_tok) fail(cur(), "unexpected closing delimiter");
          break;
        }
        --depth;
        bool was_brace = (t == "}");
        advance();
        if (depth == 0 && was_brace) {
          if (at("else") || at("catch") || at("finally")) {
            advance();
            continue;
          }
          if (at("while")) {
            advance();
            if (at("(")) skip_balanced_parens();
            accept(";");
          }
          break;
        }
        continue;
      }
      if (t == ";" && depth == 0) {
        advance();
        break;
      }
      advance();
    }
    NodeId n = add(NodeKind::OpaqueStmt);
    nodes_[n].span = span_since(start_tok);
    return n;
  }

  // ---- expressions ----------------------------------------------------

  NodeId expr_or_opaque(std::initializer_list<std::string_view> terminators) {
    Mark m = mark();
    std::optional<NodeId> expr = parse_expression();
    if (expr) {
      for (std::string_view t : terminators) {
        if (at(t)) return *expr;
      }
    }
    rewind(m);
    return opaque_expr_capture(terminators);
  }

  NodeId opaque_expr_capture(std::initializer_list<std::string_view> terminators) {
    std::size_t start_tok = pos_;
    int depth = 0;
    std::size_t last_opener = pos_;
    while (true) {
      if (at_end()) fail(tokens_[last_opener], "unbalanced delimiter");
      std::string_view t = cur_text();
      if (depth == 0) {
        bool stop = false;
        for (std::string_view term : terminators) {
          if (t == term) {
            stop = true;
            break;
          }
        }
        // Never run past the end of the enclosing scope.
        if (t == ")" || t == "]" || t == "}" || t == ";") stop = true;
        if (stop) break;
      }
      if (t == "(" || t == "[" || t == "{") {
        ++depth;
        last_opener = pos_;
      } else if (t == ")" || t == "]" || t == "}") {
        --depth;
      }
      advance();
    }
    if (pos_ == start_tok) fail(cur(), "expected expression");
    NodeId n = add(NodeKind::OpaqueExpr);
    nodes_[n].span = span_since(start_tok);
    return n;
  }

  std::optional<NodeId> parse_expression() { return parse_assignment(); }

  std::optional<NodeId> parse_assignment() {
    Mark m = mark();
    std::optional<NodeId> lhs = parse_binary(0);
    if (!lhs) {
      rewind(m);
      return std::nullopt;
    }
    if (!at_end() && cur().kind == Token::Kind::Punct &&
        kAssignOps.count(cur_text())) {
      NodeKind k = nodes_[*lhs].kind;
      if (k != NodeKind::NameExpr && k != NodeKind::FieldAccess) {
        rewind(m);
        return std::nullopt;
      }
      std::string op(cur_text());
      advance();
      std::optional<NodeId> rhs = parse_assignment();
      if (!rhs) {
        rewind(m);
        return std::nullopt;
      }
      NodeId node = add(NodeKind::AssignExpr);
      nodes_[node].name = std::move(op);
      adopt(node, *lhs);
      adopt(node, *rhs);
      nodes_[node].span =
          Span{nodes_[*lhs].span.start, nodes_[*rhs].span.end};
      return node;
    }
    return lhs;
  }

  static constexpr int kBinaryLevels = 10;

  bool binary_op_at_level(int level, std::string& op) {
    if (at_end() || cur().kind != Token::Kind::Punct) {
      if (level == 6 && at("instanceof")) {
        // instanceof is outside the subset; makes the expression fail.
      }
      return false;
    }
    std::string_view t = cur_text();
    auto is = [&](std::initializer_list<std::string_view> ops) {
      for (auto o : ops) {
        if (t == o) return true;
      }
      return false;
    };
    switch (level) {
      case 0: return is({"||"}) && (op = t, true);
      case 1: return is({"&&"}) && (op = t, true);
      case 2: return t == "|" && (op = t, true);
      case 3: return t == "^" && (op = t, true);
      case 4: return t == "&" && (op = t, true);
      case 5: return is({"==", "!="}) && (op = t, true);
      case 6:
        if (t == ">" && shift_follows()) return false;
        if (t == ">" && tok_text(ahead(1)) == "=") return false;  // '>' '>='
        return is({"<", ">", "<=", ">="}) && !left_shift_here() &&
               (op = t, true);
      case 7:
        if (left_shift_here()) {
          op = "<<";
          return true;
        }
        if (shift_follows()) {
          op = ">>";
          return true;
        }
        return false;
      case 8: return is({"+", "-"}) && (op = t, true);
      case 9: return is({"*", "/", "%"}) && (op = t, true);
      default: return false;
    }
  }

  bool left_shift_here() const { return at("<<"); }

  // '>' '>' with adjacent spans is a right shift; lone '>' is relational.
  bool shift_follows() const {
    return at(">") && tok_text(ahead(1)) == ">" &&
           ahead(1).span.start == cur().span.end;
  }

  std::optional<NodeId> parse_binary(int level) {
    if (level >= kBinaryLevels) return parse_unary();
    std::optional<NodeId> lhs = parse_binary(level + 1);
    if (!lhs) return std::nullopt;
    while (true) {
      if (at("instanceof")) return std::nullopt;
      std::string op;
      if (!binary_op_at_level(level, op)) break;
      advance();
      if (op == "<<" || op == ">>") {
        if (op == ">>") advance();  // consumed the first '>' above
      }
      std::optional<NodeId> rhs = parse_binary(level + 1);
      if (!rhs) return std::nullopt;
      NodeId node = add(NodeKind::BinaryExpr);
      nodes_[node].name = op;
      adopt(node, *lhs);
      adopt(node, *rhs);
      nodes_[node].span = Span{nodes_[*lhs].span.start, nodes_[*rhs].span.end};
      lhs = node;
    }
    return lhs;
  }

  bool starts_primary() const {
    if (at_end()) return false;
    switch (cur().kind) {
      case Token::Kind::Identifier:
        return !kOpaqueStatementKeywords.count(cur_text()) &&
               cur_text() != "else" && cur_text() != "instanceof";
      case Token::Kind::Number:
      case Token::Kind::String:
      case Token::Kind::Char:
        return true;
      case Token::Kind::Punct:
        return at("(");
      default:
        return false;
    }
  }

  std::optional<NodeId> parse_unary() {
    if ((at("-") || at("+")) && ahead(1).kind == Token::Kind::Number) {
      std::size_t start_tok = pos_;
      std::string sign(cur_text());
      advance();
      std::string num(cur_text());
      advance();
      NodeId node = add(NodeKind::Literal);
      nodes_[node].name = (sign == "-" ? "-" : "") + num;
      nodes_[node].span = span_since(start_tok);
      return parse_postfix(node);
    }
    if (at("(")) {
      Mark m = mark();
      std::size_t start_tok = pos_;
      advance();
      std::optional<NodeId> inner = parse_expression();
      if (inner && accept(")")) {
        if (starts_primary() || at("new") || at("this")) {
          // A cast, which is outside the subset.
          rewind(m);
          return std::nullopt;
        }
        nodes_[*inner].span = span_since(start_tok);
        return parse_postfix(*inner);
      }
      rewind(m);
      return std::nullopt;
    }
    return parse_primary_postfix();
  }

  std::optional<NodeId> parse_primary_postfix() {
    std::optional<NodeId> base = parse_primary();
    if (!base) return std::nullopt;
    return parse_postfix(*base);
  }

  std::optional<NodeId> parse_primary() {
    if (at_end()) return std::nullopt;
    const Token& t = cur();
    switch (t.kind) {
      case Token::Kind::Number:
      case Token::Kind::String:
      case Token::Kind::Char: {
        NodeId node = add(NodeKind::Literal);
        nodes_[node].name = std::string(tok_text(t));
        nodes_[node].span = t.span;
        advance();
        return node;
      }
      case Token::Kind::Identifier: {
        std::string_view text = cur_text();
        if (text == "true" || text == "false" || text == "null") {
          NodeId node = add(NodeKind::Literal);
          nodes_[node].name = std::string(text);
          nodes_[node].span = t.span;
          advance();
          return node;
        }
        if (text == "new") return parse_object_creation();
        if (kOpaqueStatementKeywords.count(text) || text == "else" ||
            text == "if" || text == "return" || text == "instanceof") {
          return std::nullopt;
        }
        NodeId node = add(NodeKind::NameExpr);
        nodes_[node].name = std::string(text);
        nodes_[node].span = t.span;
        advance();
        return node;
      }
      default:
        return std::nullopt;
    }
  }

  std::optional<NodeId> parse_object_creation() {
    std::size_t start_tok = pos_;
    expect("new", "object creation");
    if (!at_ident()) return std::nullopt;
    std::size_t type_start = pos_;
    advance();
    while (at(".") && ahead(1).kind == Token::Kind::Identifier) {
      advance();
      advance();
    }
    if (at("<")) {
      Mark m = mark();
      std::size_t probe_start = pos_;
      int depth = 0;
      bool ok = false;
      while (!at_end()) {
        if (at("<")) {
          ++depth;
          advance();
          continue;
        }
        if (at(">")) {
          --depth;
          advance();
          if (depth == 0) {
            ok = true;
            break;
          }
          continue;
        }
        if (!type_argument_token(cur().kind, cur_text())) break;
        advance();
      }
      if (!ok) {
        rewind(m);
        (void)probe_start;
        return std::nullopt;
      }
    }
    Span type_span = span_since(type_start);
    if (!at("(")) return std::nullopt;  // array creation: outside the subset
    std::optional<std::vector<NodeId>> args = parse_args();
    if (!args) return std::nullopt;
    if (at("{")) return std::nullopt;  // anonymous class: outside the subset
    NodeId node = add(NodeKind::ObjectCreation);
    nodes_[node].name = std::string(text_.substr(type_span.start, type_span.size()));
    for (NodeId a : *args) adopt(node, a);
    nodes_[node].span = span_since(start_tok);
    return node;
  }

  std::optional<std::vector<NodeId>> parse_args() {
    expect("(", "argument list");
    std::vector<NodeId> args;
    if (accept(")")) return args;
    while (true) {
      args.push_back(expr_or_opaque({",", ")"}));
      if (accept(",")) continue;
      if (accept(")")) return args;
      return std::nullopt;
    }
  }

  std::optional<NodeId> parse_postfix(NodeId base) {
    NodeId cur_node = base;
    while (true) {
      if (at(".") && ahead(1).kind == Token::Kind::Identifier) {
        std::string member(tok_text(ahead(1)));
        if (tok_text(ahead(2)) == "(") {
          advance();
          advance();
          std::optional<std::vector<NodeId>> args = parse_args();
          if (!args) return std::nullopt;
          NodeId node = add(NodeKind::MethodInvocation);
          nodes_[node].name = std::move(member);
          nodes_[node].has_receiver = true;
          adopt(node, cur_node);
          for (NodeId a : *args) adopt(node, a);
          nodes_[node].span =
              Span{nodes_[cur_node].span.start, tokens_[pos_ - 1].span.end};
          cur_node = node;
          continue;
        }
        advance();
        advance();
        NodeId node = add(NodeKind::FieldAccess);
        nodes_[node].name = std::move(member);
        adopt(node, cur_node);
        nodes_[node].span =
            Span{nodes_[cur_node].span.start, tokens_[pos_ - 1].span.end};
        cur_node = node;
        continue;
      }
      if (at("(") && nodes_[cur_node].kind == NodeKind::NameExpr &&
          nodes_[cur_node].children.empty()) {
        std::string name = nodes_[cur_node].name;
        Span name_span = nodes_[cur_node].span;
        std::optional<std::vector<NodeId>> args = parse_args();
        if (!args) return std::nullopt;
        NodeId node = add(NodeKind::MethodInvocation);
        nodes_[node].name = std::move(name);
        nodes_[node].has_receiver = false;
        for (NodeId a : *args) adopt(node, a);
        nodes_[node].span = Span{name_span.start, tokens_[pos_ - 1].span.end};
        cur_node = node;
        continue;
      }
      if (at("[") || at("::") || at("->") || at("++") || at("--")) {
        return std::nullopt;
      }
      break;
    }
    return cur_node;
  }

  std::string text_;
  std::string path_;
  std::vector<Token> tokens_;
  std::vector<Span> comments_;
  std::size_t pos_ = 0;
  std::vector<Node> nodes_;
};

}  // namespace

SourceUnit parse(std::string text, std::string path) {
  Parser parser(std::move(text), std::move(path));
  return parser.run();
}

SourceUnit parse_expression_snippet(const std::string& expression_text) {
  std::string wrapped =
      "class __Snippet { void __snippet() { __v = " + expression_text + "; } }";
  SourceUnit unit = parse(std::move(wrapped), "<expression>");
  // root -> class -> method -> block -> stmt(ExprStmt: AssignExpr) -> rhs
  NodeId cls = unit.node(unit.root).children.at(0);
  NodeId method = unit.node(cls).children.at(0);
  NodeId block = unit.node(method).children.back();
  NodeId stmt = unit.node(block).children.at(0);
  if (unit.node(stmt).kind == NodeKind::ExprStmt) {
    NodeId expr = unit.node(stmt).children.at(0);
    if (unit.node(expr).kind == NodeKind::AssignExpr) {
      unit.root = unit.node(expr).children.at(1);
      return unit;
    }
  }
  unit.root = stmt;
  return unit;
}

SourceUnit parse_statements_snippet(const std::string& statements_text) {
  std::string wrapped =
      "class __Snippet { void __snippet() {\n" + statements_text + "\n} }";
  return parse(std::move(wrapped), "<statements>");
}

NodeId body_block(const SourceUnit& snippet_unit) {
  NodeId cls = snippet_unit.node(snippet_unit.root).children.at(0);
  NodeId method = snippet_unit.node(cls).children.back();
  return snippet_unit.node(method).children.back();
}

}  // namespace apievolve::jsrc
