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

#include <random>
#include <string>

#include "apievolve/errors.hpp"
#include "apievolve/parse.hpp"
#include "apievolve/script.hpp"
#include "doctest.h"

using namespace apievolve;
using namespace apievolve::script;
using apievolve::jsrc::SourceUnit;

namespace {

const std::string kGetCurrentMinuteExample =
    "class ClockActivity {\n"
    "    void read(TimePicker picker) {\n"
    "        int minutes;\n"
    "        if (android.os.Build.VERSION.SDK_INT >=\n"
    "                android.os.Build.VERSION_CODES.M) {\n"
    "            minutes = picker.getMinute();\n"
    "        } else {\n"
    "            minutes = picker.getCurrentMinute();\n"
    "        }\n"
    "        use(minutes);\n"
    "    }\n"
    "}\n";

ApiMapping minute_mapping() {
  return parse_mapping(
      "deprecated: android.widget.TimePicker#getCurrentMinute()\n"
      "replacement: android.widget.TimePicker#getMinute()\n"
      "guard-symbol: android.os.Build.VERSION_CODES.M\n"
      "guard-level: 23\n");
}

ApiMapping stream_type_mapping() {
  return parse_mapping(
      "deprecated: android.media.MediaPlayer#setAudioStreamType(int)\n"
      "replacement: android.media.MediaPlayer#setAudioAttributes("
      "android.media.AudioAttributes)\n"
      "guard-symbol: android.os.Build.VERSION_CODES.LOLLIPOP\n"
      "guard-level: 21\n");
}

bool has_metavariable(const UpdateScript& s, const std::string& name,
                      Metavariable::Kind kind) {
  for (const Metavariable& m : s.metavariables) {
    if (m.name == name && m.kind == kind) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("a guarded example yields a script with a receiver metavariable") {
  SourceUnit unit = jsrc::parse(kGetCurrentMinuteExample);
  UpdateScript s = generate_script(unit, minute_mapping());

  CHECK(has_metavariable(s, "recv", Metavariable::Kind::Identifier));
  CHECK(has_metavariable(s, "ret", Metavariable::Kind::Identifier));
  CHECK(s.guard_symbol == "android.os.Build.VERSION_CODES.M");
  CHECK(s.guard_level == 23);
  CHECK(s.carried_definitions.empty());
  CHECK(s.carried_bindings.empty());
  CHECK(s.value_used);
  REQUIRE(s.match_pattern.size() == 1);
  CHECK(s.match_pattern[0] == "ret = recv.getCurrentMinute();");
  REQUIRE(s.replacement_template.size() == 5);
  CHECK(s.replacement_template[1] == "    ret = recv.getMinute();");
  CHECK(s.replacement_template[3] == "    ret = recv.getCurrentMinute();");
  CHECK(s.return_type == "int");
}

TEST_CASE("an inline builder argument becomes a carried binding") {
  std::string example =
      "public class AudioPlayer {\n"
      "    private void setAttributes() {\n"
      "        if (android.os.Build.VERSION.SDK_INT >=\n"
      "                android.os.Build.VERSION_CODES.LOLLIPOP) {\n"
      "            mMediaPlayer.setAudioAttributes(new\n"
      "                AudioAttributes.Builder().build());\n"
      "        } else {\n"
      "            mMediaPlayer.setAudioStreamType(AudioManager.STREAM_MUSIC);\n"
      "        }\n"
      "    }\n"
      "}\n";
  SourceUnit unit = jsrc::parse(example);
  UpdateScript s = generate_script(unit, stream_type_mapping());
  REQUIRE(s.carried_bindings.size() == 1);
  CHECK(s.carried_bindings[0].first == "b0");
  CHECK(s.carried_bindings[0].second == "new AudioAttributes.Builder().build()");
  CHECK(s.carried_definitions.empty());
}

TEST_CASE("field-resolved and inline arguments generate equivalent scripts") {
  std::string field_example =
      "public class AudioPlayer {\n"
      "    AudioAttributes.Builder builder = new AudioAttributes.Builder();\n"
      "    AudioAttributes attributes = builder.build();\n"
      "    private void setAttributes() {\n"
      "        if (android.os.Build.VERSION.SDK_INT >=\n"
      "                android.os.Build.VERSION_CODES.LOLLIPOP) {\n"
      "            mMediaPlayer.setAudioAttributes(attributes);\n"
      "        } else {\n"
      "            mMediaPlayer.setAudioStreamType(AudioManager.STREAM_MUSIC);\n"
      "        }\n"
      "    }\n"
      "}\n";
  std::string inline_example =
      "public class AudioPlayer {\n"
      "    private void setAttributes() {\n"
      "        if (android.os.Build.VERSION.SDK_INT >=\n"
      "                android.os.Build.VERSION_CODES.LOLLIPOP) {\n"
      "            mMediaPlayer.setAudioAttributes(new AudioAttributes.Builder().build());\n"
      "        } else {\n"
      "            mMediaPlayer.setAudioStreamType(AudioManager.STREAM_MUSIC);\n"
      "        }\n"
      "    }\n"
      "}\n";
  UpdateScript a =
      generate_script(jsrc::parse(field_example), stream_type_mapping());
  UpdateScript b =
      generate_script(jsrc::parse(inline_example), stream_type_mapping());
  CHECK(scripts_structurally_equal(a, b));
  CHECK(serialize_script(a) == serialize_script(b));
}

TEST_CASE("a minimal zero-argument script serializes to the documented shape") {
  UpdateScript s;
  s.name = "MediaPlayer_release_to_close";
  s.metavariables = {{Metavariable::Kind::Identifier, "recv"}};
  s.guard_symbol = "android.os.Build.VERSION_CODES.O";
  s.guard_level = 26;
  s.match_pattern = {"recv.release();"};
  s.replacement_template = {
      "if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.O) {",
      "    recv.close();",
      "} else {",
      "    recv.release();",
      "}",
  };
  std::string text = serialize_script(s);
  CHECK(text ==
        "@MediaPlayer_release_to_close@\n"
        "identifier recv;\n"
        "@@\n"
        "- recv.release();\n"
        "+ if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.O) {\n"
        "+     recv.close();\n"
        "+ } else {\n"
        "+     recv.release();\n"
        "+ }\n");
  UpdateScript back = parse_script(text);
  CHECK(scripts_structurally_equal(s, back));
  CHECK(back.deprecated_name == "release");
  CHECK(back.deprecated_arity == 0);
  CHECK(back.replacement_name == "close");
  CHECK(back.guard_level == 26);
  CHECK_FALSE(back.value_used);
}

TEST_CASE("serialization round-trips 100 randomized scripts") {
  std::mt19937 rng(20260809);
  const char* guard_symbols[] = {
      "android.os.Build.VERSION_CODES.M", "android.os.Build.VERSION_CODES.O",
      "android.os.Build.VERSION_CODES.LOLLIPOP",
      "android.os.Build.VERSION_CODES.N", "23", "26", "21",
  };
  for (int round = 0; round < 100; ++round) {
    UpdateScript s;
    std::size_t arity = rng() % 4;
    bool value_used = rng() % 2;
    bool instance = rng() % 2;
    std::size_t bindings = rng() % 3;
    s.name = "api_" + std::to_string(round) + "_update";
    s.guard_symbol = guard_symbols[rng() % 7];
    s.guard_level = *sdk_level_for_symbol(s.guard_symbol);
    s.value_used = value_used;

    std::string dep = "oldCall" + std::to_string(rng() % 10);
    std::string repl = "newCall" + std::to_string(rng() % 10);
    std::string recv_tok = instance ? "recv" : "Helper";

    std::string dep_args;
    for (std::size_t i = 0; i < arity; ++i) {
      if (i) dep_args += ", ";
      dep_args += "p" + std::to_string(i);
      s.metavariables.push_back(
          {Metavariable::Kind::Identifier, "p" + std::to_string(i)});
    }
    if (instance) {
      s.metavariables.push_back({Metavariable::Kind::Identifier, "recv"});
    }
    if (value_used) {
      s.metavariables.push_back({Metavariable::Kind::Identifier, "ret"});
    }
    for (std::size_t i = 0; i < arity; ++i) {
      s.param_types.push_back("int");
      s.metavariables.push_back(
          {Metavariable::Kind::Type, "T" + std::to_string(i)});
    }
    if (instance) {
      s.receiver_type = "android.example.Widget";
      s.metavariables.push_back({Metavariable::Kind::Type, "Tr"});
    }
    if (value_used) {
      s.return_type = "int";
      s.metavariables.push_back({Metavariable::Kind::Type, "Tret"});
    }
    std::string repl_args = dep_args;
    const char* binding_pool[] = {
        "Html.FROM_HTML_MODE_LEGACY",
        "new AudioAttributes.Builder().build()",
        "makeThing(3, 9 / 3)",
    };
    for (std::size_t k = 0; k < bindings; ++k) {
      std::string name = "b" + std::to_string(k);
      s.carried_bindings.emplace_back(name, binding_pool[rng() % 3]);
      s.metavariables.push_back({Metavariable::Kind::Expression, name});
      if (!repl_args.empty()) repl_args += ", ";
      repl_args += name;
    }
    std::string ret_prefix = value_used ? "ret = " : "";
    s.match_pattern = {ret_prefix + recv_tok + "." + dep + "(" + dep_args + ");"};
    s.replacement_template = {
        "if (android.os.Build.VERSION.SDK_INT >= " + s.guard_symbol + ") {",
        "    " + ret_prefix + recv_tok + "." + repl + "(" + repl_args + ");",
        "} else {",
        "    " + ret_prefix + recv_tok + "." + dep + "(" + dep_args + ");",
        "}",
    };
    if (rng() % 2) {
      s.carried_definitions.push_back(
          {flow::Definition::Kind::Method, "makeThing",
           "public int makeThing(int a, int b) {\n    return a + b;\n}"});
    }
    if (rng() % 3 == 0) {
      s.carried_definitions.push_back(
          {flow::Definition::Kind::Class, "Helper",
           "class Helper {\n    public int get() {\n        return 1;\n    }\n}"});
    }

    std::string text = serialize_script(s);
    UpdateScript back = parse_script(text);
    CHECK_MESSAGE(scripts_structurally_equal(s, back),
                  "round " << round << " diverged:\n" << text);
    CHECK(serialize_script(back) == text);
  }
}

TEST_CASE("missing @@ separator is a syntax error") {
  CHECK_THROWS_AS(parse_script("@x@\nidentifier recv;\n- recv.f();\n"),
                  ScriptSyntaxError);
}

TEST_CASE("undeclared metavariables are rejected") {
  std::string text =
      "@x@\n"
      "identifier recv;\n"
      "@@\n"
      "- recv.f();\n"
      "+ if (android.os.Build.VERSION.SDK_INT >= 23) {\n"
      "+     recv.g(e9);\n"
      "+ } else {\n"
      "+     recv.f();\n"
      "+ }\n";
  CHECK_THROWS_AS(parse_script(text), UndeclaredMetavariable);
}

TEST_CASE("unknown SDK symbols are rejected at parse time") {
  std::string text =
      "@x@\n"
      "identifier recv;\n"
      "@@\n"
      "- recv.f();\n"
      "+ if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.MYSTERY) {\n"
      "+     recv.g();\n"
      "+ } else {\n"
      "+     recv.f();\n"
      "+ }\n";
  CHECK_THROWS_AS(parse_script(text), ScriptSyntaxError);
}

TEST_CASE("examples without a version guard are rejected") {
  std::string example =
      "class A { void m(TimePicker picker) { int x = picker.getCurrentMinute(); } }";
  CHECK_THROWS_AS(generate_script(jsrc::parse(example), minute_mapping()),
                  GenerateError);
  try {
    generate_script(jsrc::parse(example), minute_mapping());
  } catch (const GenerateError& e) {
    CHECK(e.kind() == GenerateError::Kind::NoGuardFound);
    CHECK(std::string(e.what()).find("no version guard found") !=
          std::string::npos);
  }
}

TEST_CASE("guards holding the same API on both sides are rejected") {
  std::string example =
      "class A {\n"
      "    void m(TimePicker picker) {\n"
      "        if (android.os.Build.VERSION.SDK_INT >= 23) {\n"
      "            picker.getCurrentMinute();\n"
      "        } else {\n"
      "            picker.getCurrentMinute();\n"
      "        }\n"
      "    }\n"
      "}\n";
  try {
    generate_script(jsrc::parse(example), minute_mapping());
    FAIL("expected GenerateError");
  } catch (const GenerateError& e) {
    CHECK(e.kind() == GenerateError::Kind::BothBranchesSameApi);
  }
}

TEST_CASE("out-of-file values in new arguments are detected errors") {
  std::string example =
      "public class MixedPositionProvider {\n"
      "    private GnssStatus.Callback callback;\n"
      "    public void startUpdates() {\n"
      "        GpsStatus.Listener listener = this;\n"
      "        if (android.os.Build.VERSION.SDK_INT >=\n"
      "                android.os.Build.VERSION_CODES.N) {\n"
      "            locationManager.registerGnssStatusCallback(callback);\n"
      "        } else {\n"
      "            locationManager.addGpsStatusListener(listener);\n"
      "        }\n"
      "    }\n"
      "}\n";
  ApiMapping mapping = parse_mapping(
      "deprecated: android.location.LocationManager#addGpsStatusListener("
      "android.location.GpsStatus.Listener)\n"
      "replacement: android.location.LocationManager#registerGnssStatusCallback("
      "android.location.GnssStatus.Callback)\n"
      "guard-symbol: android.os.Build.VERSION_CODES.N\n"
      "guard-level: 24\n");
  try {
    generate_script(jsrc::parse(example), mapping);
    FAIL("expected GenerateError");
  } catch (const GenerateError& e) {
    CHECK(e.kind() == GenerateError::Kind::UnresolvedNewArgument);
    CHECK(std::string(e.what()).find("external-to-file") != std::string::npos);
    CHECK(std::string(e.what()).find("callback") != std::string::npos);
  }
}

TEST_CASE("bound deprecated arguments forward through carried bindings") {
  std::string example =
      "class Buzz {\n"
      "    void run(Vibrator vibrator, long[] timings, int repeatIndex) {\n"
      "        if (android.os.Build.VERSION.SDK_INT >=\n"
      "                android.os.Build.VERSION_CODES.O) {\n"
      "            vibrator.vibrate(VibrationEffect.createWaveform(timings, repeatIndex));\n"
      "        } else {\n"
      "            vibrator.vibrate(timings, repeatIndex);\n"
      "        }\n"
      "    }\n"
      "}\n";
  ApiMapping mapping = parse_mapping(
      "deprecated: android.os.Vibrator#vibrate(long[],int)\n"
      "replacement: android.os.Vibrator#vibrate(android.os.VibrationEffect)\n"
      "guard-symbol: android.os.Build.VERSION_CODES.O\n"
      "guard-level: 26\n");
  UpdateScript s = generate_script(jsrc::parse(example), mapping);
  REQUIRE(s.carried_bindings.size() == 1);
  CHECK(s.carried_bindings[0].second ==
        "VibrationEffect.createWaveform(p0, p1)");
  CHECK(s.match_pattern[0] == "recv.vibrate(p0, p1);");
}

TEST_CASE("sdk symbol table answers common constants and integers") {
  CHECK(sdk_level_for_symbol("android.os.Build.VERSION_CODES.M") == 23);
  CHECK(sdk_level_for_symbol("VERSION_CODES.LOLLIPOP") == 21);
  CHECK(sdk_level_for_symbol("O") == 26);
  CHECK(sdk_level_for_symbol("24") == 24);
  CHECK_FALSE(sdk_level_for_symbol("MYSTERY").has_value());
}

TEST_CASE("reversed guard examples normalize to replacement-first templates") {
  // Old API in the then branch, new API in the else branch.
  std::string reversed =
      "class ClockActivity {\n"
      "    void read(TimePicker picker) {\n"
      "        int minutes;\n"
      "        if (android.os.Build.VERSION.SDK_INT <\n"
      "                android.os.Build.VERSION_CODES.M) {\n"
      "            minutes = picker.getCurrentMinute();\n"
      "        } else {\n"
      "            minutes = picker.getMinute();\n"
      "        }\n"
      "    }\n"
      "}\n";
  UpdateScript s = generate_script(jsrc::parse(reversed), minute_mapping());
  REQUIRE(s.replacement_template.size() == 5);
  CHECK(s.replacement_template[0] ==
        "if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.M) {");
  CHECK(s.replacement_template[1] == "    ret = recv.getMinute();");
  CHECK(s.replacement_template[3] == "    ret = recv.getCurrentMinute();");
}

TEST_CASE("same-name same-arity pairs use condition polarity") {
  // vibrate(long) and vibrate(VibrationEffect) match on name and arity, so
  // only the comparison direction tells the branches apart.
  std::string reversed =
      "class Buzz {\n"
      "    private Vibrator vibrator;\n"
      "    private int amplitude = 3;\n"
      "    public VibrationEffect createVibration(int time, int amplitude) {\n"
      "        return VibrationEffect.createOneShot(time, amplitude);\n"
      "    }\n"
      "    void go() {\n"
      "        if (android.os.Build.VERSION.SDK_INT <\n"
      "                android.os.Build.VERSION_CODES.O) {\n"
      "            vibrator.vibrate(50);\n"
      "        } else {\n"
      "            vibrator.vibrate(createVibration(3, amplitude));\n"
      "        }\n"
      "    }\n"
      "}\n";
  ApiMapping mapping = parse_mapping(
      "deprecated: android.os.Vibrator#vibrate(long)\n"
      "replacement: android.os.Vibrator#vibrate(android.os.VibrationEffect)\n"
      "guard-symbol: android.os.Build.VERSION_CODES.O\n"
      "guard-level: 26\n");
  UpdateScript s = generate_script(jsrc::parse(reversed), mapping);
  CHECK(s.match_pattern[0] == "recv.vibrate(p0);");
  REQUIRE(s.carried_bindings.size() == 1);
  CHECK(s.carried_bindings[0].second == "createVibration(3, 3)");
  CHECK(s.replacement_template[1] == "    recv.vibrate(b0);");
  CHECK(s.replacement_template[3] == "    recv.vibrate(p0);");
}

TEST_CASE("reversed guards with distinct arities still pair by content") {
  std::string reversed =
      "class Buzz {\n"
      "    private Vibrator vibrator;\n"
      "    void go(long[] timings, int repeatIndex) {\n"
      "        if (android.os.Build.VERSION.SDK_INT <\n"
      "                android.os.Build.VERSION_CODES.O) {\n"
      "            vibrator.vibrate(timings, repeatIndex);\n"
      "        } else {\n"
      "            vibrator.vibrate(VibrationEffect.createWaveform(timings, repeatIndex));\n"
      "        }\n"
      "    }\n"
      "}\n";
  ApiMapping mapping = parse_mapping(
      "deprecated: android.os.Vibrator#vibrate(long[],int)\n"
      "replacement: android.os.Vibrator#vibrate(android.os.VibrationEffect)\n"
      "guard-symbol: android.os.Build.VERSION_CODES.O\n"
      "guard-level: 26\n");
  UpdateScript s = generate_script(jsrc::parse(reversed), mapping);
  CHECK(s.match_pattern[0] == "recv.vibrate(p0, p1);");
  CHECK(s.replacement_template[1] == "    recv.vibrate(b0);");
  REQUIRE(s.carried_bindings.size() == 1);
  CHECK(s.carried_bindings[0].second ==
        "VibrationEffect.createWaveform(p0, p1)");
}
