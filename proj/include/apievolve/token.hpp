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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "apievolve/span.hpp"

namespace apievolve::jsrc {

struct Token {
  enum class Kind { Identifier, Number, String, Char, Punct, End };
  Kind kind = Kind::End;
  Span span;

  std::string_view text(std::string_view source) const {
    return source.substr(span.start, span.size());
  }
};

struct TokenStream {
  std::vector<Token> tokens;   // terminated by a Kind::End token
  std::vector<Span> comments;  // line and block comment spans, source order
};

// Lexes Java-shaped source. Never fails: unknown bytes become one-character
// punctuation tokens. Throws ParseError on unterminated string/char/comment.
TokenStream tokenize(std::string_view text);

// Token texts without the trailing End token; whitespace-insensitive view of
// the source used for token-stream comparisons.
std::vector<std::string> token_texts(std::string_view text);

// Replaces identifier tokens found in `renames`, preserving all other bytes.
std::string substitute_identifiers(
    std::string_view text, const std::map<std::string, std::string>& renames);

// Joins tokens with canonical spacing: no space after '(' or '.', no space
// before ')' ',' ';' '.' '(' — e.g. {"f","(","9","/","3",")"} -> "f(9 / 3)".
std::string join_tokens(const std::vector<std::string>& tokens);

// Canonical one-line rendering of a source snippet.
std::string canonical_tokens(std::string_view text);

// True if the identifier/punct token sequence of `text` contains `needle`'s
// token sequence, e.g. needle "Build.VERSION.SDK_INT".
bool contains_token_sequence(std::string_view text, std::string_view needle);

// 1-based line/column of a byte offset.
std::pair<std::size_t, std::size_t> line_column(std::string_view text,
                                                std::size_t offset);

}  // namespace apievolve::jsrc
