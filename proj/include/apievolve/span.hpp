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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace apievolve::jsrc {

// Half-open byte range into a source string.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - start; }
  bool empty() const { return start == end; }
  bool contains(const Span& other) const {
    return start <= other.start && other.end <= end;
  }
  bool contains(std::size_t offset) const {
    return start <= offset && offset < end;
  }
  // Strict intersection; adjacent spans do not overlap.
  bool overlaps(const Span& other) const {
    return start < other.end && other.start < end;
  }
  bool operator==(const Span&) const = default;
};

struct Edit {
  Span span;
  std::string replacement;
};

// Ordered, non-overlapping set of text replacements. Zero-width spans are
// insertions; an insertion at the start offset of a replacement sorts first.
class EditSet {
 public:
  // Throws OverlapError if the new edit intersects an existing one.
  void add(Span span, std::string replacement);
  void insert_before(std::size_t offset, std::string text) {
    add(Span{offset, offset}, std::move(text));
  }

  const std::vector<Edit>& edits() const { return edits_; }
  bool empty() const { return edits_.empty(); }

  // Applies the edits to `text`; bytes outside edited spans pass through.
  std::string apply(std::string_view text) const;

  // Maps a span of the pre-edit text to post-edit coordinates. The span must
  // not intersect any edit.
  Span remap(Span span) const;

 private:
  std::vector<Edit> edits_;
};

// Returns the whitespace prefix of the line containing `offset`.
std::string indent_at(std::string_view text, std::size_t offset);

}  // namespace apievolve::jsrc
