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

#include "apievolve/span.hpp"

#include <algorithm>
#include <stdexcept>

#include "apievolve/errors.hpp"

namespace apievolve::jsrc {

void EditSet::add(Span span, std::string replacement) {
  Edit edit{span, std::move(replacement)};
  auto pos = std::lower_bound(
      edits_.begin(), edits_.end(), edit, [](const Edit& a, const Edit& b) {
        if (a.span.start != b.span.start) return a.span.start < b.span.start;
        return a.span.end < b.span.end;
      });
  if (pos != edits_.end()) {
    if (edit.span.overlaps(pos->span) ||
        (edit.span == pos->span && edit.span.empty())) {
      throw OverlapError("edits overlap at offset " +
                         std::to_string(edit.span.start));
    }
  }
  if (pos != edits_.begin()) {
    const Edit& prev = *(pos - 1);
    if (edit.span.overlaps(prev.span) ||
        (edit.span == prev.span && edit.span.empty())) {
      throw OverlapError("edits overlap at offset " +
                         std::to_string(edit.span.start));
    }
  }
  edits_.insert(pos, std::move(edit));
}

std::string EditSet::apply(std::string_view text) const {
  std::string out;
  out.reserve(text.size());
  std::size_t cursor = 0;
  for (const Edit& edit : edits_) {
    if (edit.span.end > text.size()) {
      throw std::out_of_range("edit span exceeds text length");
    }
    out.append(text.substr(cursor, edit.span.start - cursor));
    out.append(edit.replacement);
    cursor = edit.span.end;
  }
  out.append(text.substr(cursor));
  return out;
}

Span EditSet::remap(Span span) const {
  std::ptrdiff_t shift = 0;
  for (const Edit& edit : edits_) {
    if (edit.span.overlaps(span)) {
      throw std::logic_error("cannot remap a span intersecting an edit");
    }
    if (edit.span.end <= span.start) {
      shift += static_cast<std::ptrdiff_t>(edit.replacement.size()) -
               static_cast<std::ptrdiff_t>(edit.span.size());
    }
  }
  return Span{span.start + shift, span.end + shift};
}

std::string indent_at(std::string_view text, std::size_t offset) {
  std::size_t line_start = text.rfind('\n', offset == 0 ? 0 : offset - 1);
  line_start = (line_start == std::string_view::npos) ? 0 : line_start + 1;
  std::size_t i = line_start;
  while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  return std::string(text.substr(line_start, i - line_start));
}

}  // namespace apievolve::jsrc
