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

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "apievolve/ast.hpp"
#include "apievolve/errors.hpp"
#include "apievolve/parse.hpp"
#include "apievolve/token.hpp"
#include "doctest.h"

using namespace apievolve;
using namespace apievolve::jsrc;

namespace {

std::vector<NodeId> collect(const SourceUnit& unit, NodeKind kind) {
  std::vector<NodeId> out;
  unit.for_each([&](NodeId id) {
    if (unit.node(id).kind == kind) out.push_back(id);
  });
  return out;
}

void check_span_invariants(const SourceUnit& unit) {
  unit.for_each([&](NodeId id) {
    const Node& n = unit.node(id);
    CHECK(n.span.start <= n.span.end);
    CHECK(n.span.end <= unit.text.size());
    Span prev{0, 0};
    bool first = true;
    for (NodeId c : n.children) {
      const Node& child = unit.node(c);
      CHECK(n.span.contains(child.span));
      if (!first) CHECK_FALSE(prev.overlaps(child.span));
      prev = child.span;
      first = false;
    }
  });
}

}  // namespace

TEST_CASE("version-guarded update example parses into if/else structure") {
  std::string text =
      "class Clock {\n"
      "    void read(TimePicker picker) {\n"
      "        int minutes;\n"
      "        if (android.os.Build.VERSION.SDK_INT >=\n"
      "                android.os.Build.VERSION_CODES.M) {\n"
      "            minutes = picker.getMinute();\n"
      "        } else {\n"
      "            minutes = picker.getCurrentMinute();\n"
      "        }\n"
      "    }\n"
      "}\n";
  SourceUnit unit = parse(text);
  auto ifs = collect(unit, NodeKind::IfStmt);
  REQUIRE(ifs.size() == 1);
  const Node& guard = unit.node(ifs[0]);
  CHECK(guard.has_else);
  REQUIRE(guard.children.size() == 3);
  // Both branches are blocks holding one expression statement each.
  for (int branch : {1, 2}) {
    const Node& blk = unit.node(guard.children[branch]);
    REQUIRE(blk.kind == NodeKind::Block);
    REQUIRE(blk.children.size() == 1);
    CHECK(unit.node(blk.children[0]).kind == NodeKind::ExprStmt);
  }
  CHECK(collect(unit, NodeKind::MethodInvocation).size() == 2);
  check_span_invariants(unit);
  CHECK(render_edits(unit, EditSet{}) == text);
}

TEST_CASE("empty class parses to a single declaration with no members") {
  SourceUnit unit = parse("class A {}");
  const Node& root = unit.node(unit.root);
  REQUIRE(root.kind == NodeKind::CompilationUnit);
  REQUIRE(root.children.size() == 1);
  const Node& cls = unit.node(root.children[0]);
  CHECK(cls.kind == NodeKind::ClassDecl);
  CHECK(cls.name == "A");
  CHECK(cls.children.empty());
}

TEST_CASE("lambda-bearing statement is captured opaquely and round-trips") {
  std::string text = "class A { void m(){ list.forEach(x -> f(x)); } }";
  SourceUnit unit = parse(text);
  auto methods = collect(unit, NodeKind::MethodDecl);
  REQUIRE(methods.size() == 1);
  NodeId body = unit.node(methods[0]).children.back();
  REQUIRE(unit.node(body).kind == NodeKind::Block);
  REQUIRE(unit.node(body).children.size() == 1);
  CHECK(unit.node(unit.node(body).children[0]).kind == NodeKind::OpaqueStmt);
  CHECK(render_edits(unit, EditSet{}) == text);
}

TEST_CASE("loops, anonymous classes and switch become opaque statements") {
  std::string text =
      "class A {\n"
      "    void m() {\n"
      "        for (int i = 0; i < 3; i++) { f(i); }\n"
      "        new Thread(new Runnable() { public void run() {} }).start();\n"
      "        switch (k) { case 1: break; default: break; }\n"
      "        do { g(); } while (k > 0);\n"
      "        try { h(); } catch (Exception e) { } finally { i(); }\n"
      "    }\n"
      "}\n";
  SourceUnit unit = parse(text);
  auto methods = collect(unit, NodeKind::MethodDecl);
  REQUIRE(methods.size() == 1);
  const Node& body = unit.node(unit.node(methods[0]).children.back());
  REQUIRE(body.children.size() == 5);
  for (NodeId c : body.children) {
    CHECK(unit.node(c).kind == NodeKind::OpaqueStmt);
  }
  CHECK(render_edits(unit, EditSet{}) == text);
  check_span_invariants(unit);
}

TEST_CASE("qualified inner-class constructors parse as object creations") {
  std::string text =
      "class A {\n"
      "    void m() {\n"
      "        Notification.Action action = new Notification.Action.Builder(\n"
      "            Icon.createWithResource(mContext, icon), title, intent).build();\n"
      "    }\n"
      "}\n";
  SourceUnit unit = parse(text);
  auto creations = collect(unit, NodeKind::ObjectCreation);
  REQUIRE(creations.size() == 1);
  CHECK(unit.node(creations[0]).name == "Notification.Action.Builder");
  CHECK(unit.node(creations[0]).children.size() == 3);
  auto calls = collect(unit, NodeKind::MethodInvocation);
  // build() plus Icon.createWithResource(...)
  CHECK(calls.size() == 2);
  CHECK(render_edits(unit, EditSet{}) == text);
}

TEST_CASE("unbalanced input raises a parse error with position") {
  CHECK_THROWS_AS(parse("class A { void m() { f(; } }"), ParseError);
  CHECK_THROWS_AS(parse("class A { void m() {"), ParseError);
  try {
    parse("class A {\n  void m() {\n");
  } catch (const ParseError& e) {
    CHECK(e.line() >= 1);
    CHECK(e.column() >= 1);
  }
}

TEST_CASE("fields, imports and nested classes keep their declarations") {
  std::string text =
      "package com.example.app;\n"
      "import android.media.AudioManager;\n"
      "import static java.lang.Math.*;\n"
      "\n"
      "public class Player {\n"
      "    private int duration = 9;\n"
      "    private AudioManager audioManager;\n"
      "    public void play() { audioManager.requestAudioFocus(this, 3, 1); }\n"
      "    private class Helper {\n"
      "        public int get() { return duration; }\n"
      "    }\n"
      "}\n";
  SourceUnit unit = parse(text);
  auto classes = collect(unit, NodeKind::ClassDecl);
  REQUIRE(classes.size() == 2);
  auto fields = collect(unit, NodeKind::FieldDecl);
  REQUIRE(fields.size() == 2);
  CHECK(unit.node(fields[0]).name == "duration");
  CHECK(unit.node(fields[0]).has_init);
  CHECK(unit.node(fields[1]).name == "audioManager");
  CHECK_FALSE(unit.node(fields[1]).has_init);
  CHECK(collect(unit, NodeKind::Import).size() == 2);
  CHECK(render_edits(unit, EditSet{}) == text);
  check_span_invariants(unit);
}

TEST_CASE("string concatenation chains and multiple calls in one statement") {
  std::string text =
      "class A {\n"
      "    void m() {\n"
      "        dateTime = tempFunctionReturnValue + \":\" +\n"
      "            timePickerBegin.getCurrentMinute() + \"-\" +\n"
      "            timePickerEnd.getCurrentHour() + \":\";\n"
      "    }\n"
      "}\n";
  SourceUnit unit = parse(text);
  auto stmts = collect(unit, NodeKind::ExprStmt);
  REQUIRE(stmts.size() == 1);
  CHECK(collect(unit, NodeKind::MethodInvocation).size() == 2);
  CHECK(collect(unit, NodeKind::BinaryExpr).size() == 5);
  CHECK(render_edits(unit, EditSet{}) == text);
}

TEST_CASE("constructors and varargs parameters are recognized") {
  std::string text =
      "class AudioFocusRequestOreo {\n"
      "    private AudioFocusRequest audioFocusRequest;\n"
      "    public AudioFocusRequestOreo(AudioManager.OnAudioFocusChangeListener listener) {\n"
      "        this.listener = listener;\n"
      "    }\n"
      "    void log(String... parts) { }\n"
      "}\n";
  SourceUnit unit = parse(text);
  auto methods = collect(unit, NodeKind::MethodDecl);
  REQUIRE(methods.size() == 2);
  CHECK(unit.node(methods[0]).is_constructor);
  CHECK(unit.node(methods[0]).name == "AudioFocusRequestOreo");
  auto params = collect(unit, NodeKind::Param);
  REQUIRE(params.size() == 2);
  CHECK(unit.node(params[0]).type_text ==
        "AudioManager.OnAudioFocusChangeListener");
  CHECK(render_edits(unit, EditSet{}) == text);
}

TEST_CASE("annotated declarations and generic locals parse") {
  std::string text =
      "class A {\n"
      "    @Override\n"
      "    public int saveLayer(float left, @Nullable Paint paint) {\n"
      "        Map<String, List<Integer>> index = new HashMap<String, List<Integer>>();\n"
      "        return 0;\n"
      "    }\n"
      "}\n";
  SourceUnit unit = parse(text);
  auto locals = collect(unit, NodeKind::LocalVarDecl);
  REQUIRE(locals.size() == 1);
  CHECK(unit.node(locals[0]).name == "index");
  CHECK(unit.node(locals[0]).type_text == "Map<String, List<Integer>>");
  CHECK(collect(unit, NodeKind::ReturnStmt).size() == 1);
  CHECK(render_edits(unit, EditSet{}) == text);
}

TEST_CASE("comparison chains are not mistaken for generic declarations") {
  std::string text = "class A { void m() { ok = a < b && c > d; } }";
  SourceUnit unit = parse(text);
  auto assigns = collect(unit, NodeKind::AssignExpr);
  REQUIRE(assigns.size() == 1);
  CHECK(collect(unit, NodeKind::LocalVarDecl).empty());
  CHECK(render_edits(unit, EditSet{}) == text);
}

TEST_CASE("negative literals fold into literal nodes") {
  std::string text = "class A { void m() { vibrator.vibrate(pattern, -1); } }";
  SourceUnit unit = parse(text);
  auto calls = collect(unit, NodeKind::MethodInvocation);
  REQUIRE(calls.size() == 1);
  const Node& call = unit.node(calls[0]);
  REQUIRE(call.children.size() == 3);  // receiver + 2 args
  const Node& last = unit.node(call.children[2]);
  CHECK(last.kind == NodeKind::Literal);
  CHECK(last.name == "-1");
}

TEST_CASE("expression snippets parse standalone") {
  SourceUnit unit = parse_expression_snippet("new AudioAttributes.Builder().build()");
  const Node& root = unit.node(unit.root);
  CHECK(root.kind == NodeKind::MethodInvocation);
  CHECK(root.name == "build");
  REQUIRE(root.children.size() == 1);
  CHECK(unit.node(root.children[0]).kind == NodeKind::ObjectCreation);
}

TEST_CASE("opaque nodes have no children anywhere in the tree") {
  std::string text =
      "class A { void m() { int x = flag ? 1 : 2; while (x > 0) { x--; } } }";
  SourceUnit unit = parse(text);
  unit.for_each([&](NodeId id) {
    const Node& n = unit.node(id);
    if (n.kind == NodeKind::OpaqueStmt || n.kind == NodeKind::OpaqueExpr) {
      CHECK(n.children.empty());
    }
  });
  CHECK(render_edits(unit, EditSet{}) == text);
}

TEST_CASE("every bundled corpus file round-trips byte-for-byte") {
  namespace fs = std::filesystem;
  std::string corpus = std::string(APIEVOLVE_SOURCE_DIR) + "/corpus";
  std::size_t seen = 0;
  for (const auto& item : fs::recursive_directory_iterator(corpus)) {
    if (!item.is_regular_file() || item.path().extension() != ".java") continue;
    std::ifstream in(item.path(), std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    SourceUnit unit = parse(text, item.path().string());
    CHECK(render_edits(unit, EditSet{}) == text);
    // Child spans sit inside their parents; siblings do not overlap.
    unit.for_each([&](NodeId id) {
      const Node& n = unit.node(id);
      Span prev{0, 0};
      bool first = true;
      for (NodeId c : n.children) {
        CHECK(n.span.contains(unit.node(c).span));
        if (!first) CHECK_FALSE(prev.overlaps(unit.node(c).span));
        prev = unit.node(c).span;
        first = false;
      }
    });
    ++seen;
  }
  CHECK(seen >= 50);  // examples + targets + edge cases + expected outputs
}

TEST_CASE("mutated corpus files either parse with byte round-trip or reject") {
  namespace fs = std::filesystem;
  std::vector<std::string> seeds;
  std::string corpus = std::string(APIEVOLVE_SOURCE_DIR) + "/corpus/examples";
  for (const auto& item : fs::directory_iterator(corpus)) {
    if (item.path().extension() != ".java") continue;
    std::ifstream in(item.path(), std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    seeds.push_back(buf.str());
  }
  REQUIRE(!seeds.empty());
  std::mt19937 rng(123);
  const std::string bytes = "{}()[];=.,\"'<>+-*/@ \n\tabcXYZ019_$";
  int parsed = 0;
  for (int round = 0; round < 800; ++round) {
    std::string text = seeds[rng() % seeds.size()];
    int mutations = 1 + rng() % 8;
    for (int m = 0; m < mutations && !text.empty(); ++m) {
      std::size_t at = rng() % text.size();
      switch (rng() % 3) {
        case 0: text.erase(at, 1 + rng() % 3); break;
        case 1: text.insert(at, 1, bytes[rng() % bytes.size()]); break;
        default: text[at] = bytes[rng() % bytes.size()]; break;
      }
    }
    try {
      SourceUnit unit = parse(text);
      CHECK(render_edits(unit, EditSet{}) == text);
      ++parsed;
    } catch (const ParseError&) {
      // Structurally unbalanced mutants are rejected, never mis-parsed.
    }
  }
  CHECK(parsed > 0);
}
