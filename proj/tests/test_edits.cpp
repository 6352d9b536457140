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

#include <string>
#include <vector>

#include "apievolve/ast.hpp"
#include "apievolve/errors.hpp"
#include "apievolve/parse.hpp"
#include "apievolve/span.hpp"
#include "doctest.h"

using namespace apievolve;
using namespace apievolve::jsrc;

namespace {

// Independent byte-diff oracle: the maximal [lo, hi) ranges from each end
// where the two strings agree; everything between is the changed region.
struct ByteDiff {
  std::size_t changed_regions;  // 0 or 1 supported (contiguous check)
  std::size_t lo = 0, hi_a = 0, hi_b = 0;
};

ByteDiff contiguous_diff(const std::string& a, const std::string& b) {
  std::size_t lo = 0;
  while (lo < a.size() && lo < b.size() && a[lo] == b[lo]) ++lo;
  std::size_t ra = a.size();
  std::size_t rb = b.size();
  while (ra > lo && rb > lo && a[ra - 1] == b[rb - 1]) {
    --ra;
    --rb;
  }
  ByteDiff d;
  d.changed_regions = (lo == ra && lo == rb) ? 0 : 1;
  d.lo = lo;
  d.hi_a = ra;
  d.hi_b = rb;
  return d;
}

}  // namespace

TEST_CASE("empty edit set renders the original text byte-for-byte") {
  std::string text = "class A {\n    void m() { int x = 1; }\n}\n";
  SourceUnit unit = parse(text);
  CHECK(render_edits(unit, EditSet{}) == text);
}

TEST_CASE("single replacement changes exactly one contiguous region") {
  std::string text =
      "class A {\n"
      "    void m(TimePicker picker) {\n"
      "        int minutes = picker.getCurrentMinute();\n"
      "    }\n"
      "}\n";
  SourceUnit unit = parse(text);
  std::size_t at = text.find("getCurrentMinute()");
  EditSet edits;
  edits.add(Span{at, at + std::string("getCurrentMinute()").size()},
            "getMinute()");
  std::string out = render_edits(unit, edits);

  ByteDiff d = contiguous_diff(text, out);
  REQUIRE(d.changed_regions == 1);
  CHECK(text.substr(0, d.lo) == out.substr(0, d.lo));
  CHECK(out.find("getMinute()") != std::string::npos);
  CHECK(out.find("getCurrentMinute()") == std::string::npos);
}

TEST_CASE("non-overlapping insertions are order-independent") {
  std::string text = "class A { void m() { f(); g(); } }";
  SourceUnit unit = parse(text);
  std::size_t p1 = text.find("f()");
  std::size_t p2 = text.find("g()");

  EditSet first;
  first.insert_before(p1, "a(); ");
  first.insert_before(p2, "b(); ");

  EditSet second;
  second.insert_before(p2, "b(); ");
  second.insert_before(p1, "a(); ");

  CHECK(render_edits(unit, first) == render_edits(unit, second));
}

TEST_CASE("overlapping edits are rejected") {
  EditSet edits;
  edits.add(Span{2, 8}, "x");
  CHECK_THROWS_AS(edits.add(Span{5, 9}, "y"), OverlapError);
  CHECK_THROWS_AS(edits.add(Span{0, 3}, "y"), OverlapError);
  // Adjacent edits are fine.
  edits.add(Span{8, 10}, "z");
  edits.add(Span{0, 2}, "w");
}

TEST_CASE("zero-width insertion ahead of a replacement at the same offset") {
  std::string text = "abcdef";
  EditSet edits;
  edits.add(Span{2, 4}, "X");
  edits.insert_before(2, "<");
  CHECK(edits.apply(text) == "ab<Xef");
}

TEST_CASE("remap shifts spans past earlier edits") {
  EditSet edits;
  edits.add(Span{2, 4}, "longer");   // +4
  edits.insert_before(10, "abc");    // +3
  Span s{5, 8};
  Span r = edits.remap(s);
  CHECK(r == Span{9, 12});
  Span t{12, 14};
  CHECK(edits.remap(t) == Span{19, 21});
}

TEST_CASE("indent_at returns the line's whitespace prefix") {
  std::string text = "a\n    b\n\tc\n";
  CHECK(indent_at(text, text.find('b')) == "    ");
  CHECK(indent_at(text, text.find('c')) == "\t");
  CHECK(indent_at(text, 0) == "");
}
