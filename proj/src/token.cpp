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

#include "apievolve/token.hpp"

#include <array>
#include <cctype>

#include "apievolve/errors.hpp"

namespace apievolve::jsrc {

namespace {

bool is_ident_start(unsigned char c) {
  return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80;
}

bool is_ident_part(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '$' || c >= 0x80;
}

// Multi-character punctuation, longest first. '>' is never merged into '>>'
// so that generic type arguments close one level at a time; '>=' stays fused.
constexpr std::array<std::string_view, 21> kPuncts = {
    "<<=", "->", "::", "++", "--", "<<", "<=", ">=", "==", "!=", "&&",
    "||", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "...",
};

[[noreturn]] void lex_fail(std::string_view text, std::size_t offset,
                           const std::string& message) {
  auto [line, col] = line_column(text, offset);
  throw ParseError(message, line, col);
}

}  // namespace

std::pair<std::size_t, std::size_t> line_column(std::string_view text,
                                                std::size_t offset) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

TokenStream tokenize(std::string_view text) {
  TokenStream out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    unsigned char c = text[i];
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && text[i + 1] == '/') {
      std::size_t start = i;
      while (i < n && text[i] != '\n') ++i;
      out.comments.push_back(Span{start, i});
      continue;
    }
    if (c == '/' && i + 1 < n && text[i + 1] == '*') {
      std::size_t start = i;
      i += 2;
      while (i + 1 < n && !(text[i] == '*' && text[i + 1] == '/')) ++i;
      if (i + 1 >= n) lex_fail(text, start, "unterminated block comment");
      i += 2;
      out.comments.push_back(Span{start, i});
      continue;
    }
    if (is_ident_start(c)) {
      std::size_t start = i;
      while (i < n && is_ident_part(text[i])) ++i;
      out.tokens.push_back({Token::Kind::Identifier, Span{start, i}});
      continue;
    }
    if (std::isdigit(c) ||
        (c == '.' && i + 1 < n && std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      std::size_t start = i;
      bool hex = (c == '0' && i + 1 < n && (text[i + 1] == 'x' || text[i + 1] == 'X'));
      while (i < n) {
        unsigned char d = text[i];
        if (std::isalnum(d) || d == '_') {
          // Decimal exponent sign: 1e-5, hex binary exponent: 0x1p-3.
          if (((!hex && (d == 'e' || d == 'E')) || (hex && (d == 'p' || d == 'P'))) &&
              i + 1 < n && (text[i + 1] == '+' || text[i + 1] == '-')) {
            i += 2;
            continue;
          }
          ++i;
          continue;
        }
        if (d == '.' && i + 1 < n && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
          ++i;
          continue;
        }
        if (d == '.' && i + 1 < n &&
            (text[i + 1] == 'f' || text[i + 1] == 'F' || text[i + 1] == 'd' ||
             text[i + 1] == 'D' || text[i + 1] == 'e' || text[i + 1] == 'E')) {
          ++i;
          continue;
        }
        break;
      }
      out.tokens.push_back({Token::Kind::Number, Span{start, i}});
      continue;
    }
    if (c == '"') {
      std::size_t start = i;
      ++i;
      while (i < n && text[i] != '"') {
        if (text[i] == '\\' && i + 1 < n) ++i;
        if (text[i] == '\n') lex_fail(text, start, "unterminated string literal");
        ++i;
      }
      if (i >= n) lex_fail(text, start, "unterminated string literal");
      ++i;
      out.tokens.push_back({Token::Kind::String, Span{start, i}});
      continue;
    }
    if (c == '\'') {
      std::size_t start = i;
      ++i;
      while (i < n && text[i] != '\'') {
        if (text[i] == '\\' && i + 1 < n) ++i;
        ++i;
      }
      if (i >= n) lex_fail(text, start, "unterminated char literal");
      ++i;
      out.tokens.push_back({Token::Kind::Char, Span{start, i}});
      continue;
    }
    bool matched = false;
    for (std::string_view p : kPuncts) {
      if (text.substr(i, p.size()) == p) {
        out.tokens.push_back({Token::Kind::Punct, Span{i, i + p.size()}});
        i += p.size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      out.tokens.push_back({Token::Kind::Punct, Span{i, i + 1}});
      ++i;
    }
  }
  out.tokens.push_back({Token::Kind::End, Span{n, n}});
  return out;
}

std::vector<std::string> token_texts(std::string_view text) {
  TokenStream ts = tokenize(text);
  std::vector<std::string> out;
  out.reserve(ts.tokens.size());
  for (const Token& t : ts.tokens) {
    if (t.kind == Token::Kind::End) break;
    out.emplace_back(t.text(text));
  }
  return out;
}

std::string substitute_identifiers(
    std::string_view text, const std::map<std::string, std::string>& renames) {
  TokenStream ts = tokenize(text);
  std::string out;
  out.reserve(text.size());
  std::size_t cursor = 0;
  for (const Token& t : ts.tokens) {
    if (t.kind == Token::Kind::End) break;
    if (t.kind != Token::Kind::Identifier) continue;
    auto it = renames.find(std::string(t.text(text)));
    if (it == renames.end()) continue;
    out.append(text.substr(cursor, t.span.start - cursor));
    out.append(it->second);
    cursor = t.span.end;
  }
  out.append(text.substr(cursor));
  return out;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  static const std::string no_space_after = "(.";
  static const std::string no_space_before = "),;.(";
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& tok = tokens[i];
    if (!out.empty()) {
      bool prev_tight = tokens[i - 1].size() == 1 &&
                        no_space_after.find(tokens[i - 1][0]) != std::string::npos;
      bool cur_tight =
          tok.size() == 1 && no_space_before.find(tok[0]) != std::string::npos;
      if (!prev_tight && !cur_tight) out.push_back(' ');
    }
    out.append(tok);
  }
  return out;
}

std::string canonical_tokens(std::string_view text) {
  return join_tokens(token_texts(text));
}

bool contains_token_sequence(std::string_view text, std::string_view needle) {
  std::vector<std::string> hay = token_texts(text);
  std::vector<std::string> pat = token_texts(needle);
  if (pat.empty() || hay.size() < pat.size()) return false;
  for (std::size_t i = 0; i + pat.size() <= hay.size(); ++i) {
    bool all = true;
    for (std::size_t j = 0; j < pat.size(); ++j) {
      if (hay[i + j] != pat[j]) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

}  // namespace apievolve::jsrc
