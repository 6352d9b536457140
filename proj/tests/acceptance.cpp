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
//
// Acceptance suite: one pass/fail line per criterion, zero exit only when
// every criterion holds.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "apievolve/apply.hpp"
#include "apievolve/corpus.hpp"
#include "apievolve/dataflow.hpp"
#include "apievolve/errors.hpp"
#include "apievolve/normalize.hpp"
#include "apievolve/parse.hpp"
#include "apievolve/readability.hpp"
#include "apievolve/script.hpp"
#include "apievolve/token.hpp"
#include "json.hpp"
#include "support/checkers.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace apievolve;
using Clock = std::chrono::steady_clock;

namespace {

const std::string kCorpusDir = std::string(APIEVOLVE_SOURCE_DIR) + "/corpus";

int g_failures = 0;

void criterion(const std::string& name, const std::function<std::string()>& body) {
  std::string problem;
  try {
    problem = body();
  } catch (const std::exception& e) {
    problem = std::string("exception: ") + e.what();
  }
  if (problem.empty()) {
    std::printf("[PASS] %s\n", name.c_str());
  } else {
    std::printf("[FAIL] %s: %s\n", name.c_str(), problem.c_str());
    ++g_failures;
  }
  std::fflush(stdout);
}

struct CorpusRun {
  corpus::CorpusManifest manifest;
  corpus::RunSummary summary;
  double elapsed_ms = 0.0;
};

CorpusRun run_main_corpus() {
  CorpusRun run;
  run.manifest = corpus::load_manifest(kCorpusDir + "/manifest.json");
  auto start = Clock::now();
  run.summary = corpus::run_corpus(run.manifest);
  run.elapsed_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return run;
}

std::string file_in_corpus(const std::string& rel) {
  return corpus::read_file(kCorpusDir + "/" + rel);
}

double mean_slice_score(const std::string& text, const ApiMapping& mapping) {
  jsrc::SourceUnit unit = jsrc::parse(text, "<scored>");
  auto slices = readability::slice_api_usages(unit, mapping);
  double sum = 0.0;
  for (const auto& slice : slices) {
    sum += readability::score_readability(slice.wrapped_text).value;
  }
  return sum / static_cast<double>(slices.size());
}

}  // namespace

int main() {
  std::printf(
      "[NOTE] acceptance runs on the bundled corpus and property suites; "
      "large-scale corpus statistics and third-party readability models are "
      "out of scope\n");

  CorpusRun corpus_run = run_main_corpus();
  const corpus::RunSummary& summary = corpus_run.summary;

  criterion(
      "correct-update shape: every unguarded corpus target updates and passes "
      "the structural checker in under 60 s",
      [&]() -> std::string {
        if (summary.entries.size() < 10) {
          return "fewer than 10 API mappings in the corpus";
        }
        for (std::size_t e = 0; e < summary.entries.size(); ++e) {
          const corpus::EntrySummary& entry = summary.entries[e];
          if (entry.generation_failed) {
            return entry.api + ": script creation failed: " + entry.failure_reason;
          }
          if (entry.targets < 3) return entry.api + ": fewer than 3 targets";
          if (entry.updated != entry.targets) {
            return entry.api + ": " + std::to_string(entry.updated) + "/" +
                   std::to_string(entry.targets) + " targets updated";
          }
          ApiMapping mapping = load_mapping(
              kCorpusDir + "/" + corpus_run.manifest.entries[e].mapping);
          script::UpdateScript update = script::parse_script(entry.script_text);
          for (const corpus::TargetOutcome& outcome : entry.outcomes) {
            if (outcome.report.updated() == 0 || outcome.report.failed() > 0) {
              return outcome.target + ": not cleanly updated";
            }
            jsrc::SourceUnit original = jsrc::parse(
                file_in_corpus(outcome.target), outcome.target);
            auto check = checkers::check_correct_update_shape(
                original, outcome.output_text, mapping, update,
                outcome.report.updated());
            if (!check.ok) return outcome.target + ": " + check.to_string();
          }
        }
        if (corpus_run.elapsed_ms >= 60000.0) {
          return "corpus run took " + std::to_string(corpus_run.elapsed_ms) + " ms";
        }
        return "";
      });

  criterion(
      "out-of-method resolution: requestAudioFocus and vibrate updates match "
      "the checked-in expectations token for token",
      [&]() -> std::string {
        bool saw_raf = false;
        bool saw_vibrate = false;
        for (const corpus::EntrySummary& entry : summary.entries) {
          bool is_raf = entry.api.find("requestAudioFocus") != std::string::npos;
          bool is_vibrate = entry.api == "android.os.Vibrator#vibrate(long)";
          if (!is_raf && !is_vibrate) continue;
          for (const corpus::TargetOutcome& outcome : entry.outcomes) {
            if (!outcome.expectation_checked) {
              return outcome.target + ": no checked-in expectation";
            }
            if (!outcome.expectation_matched) {
              return outcome.target + ": output differs from expectation";
            }
            if (is_raf &&
                !jsrc::contains_token_sequence(
                    outcome.output_text,
                    "new AudioFocusRequestOreo(this).getAudioFocusRequest()")) {
              return outcome.target + ": missing resolved AudioFocusRequestOreo argument";
            }
            if (is_vibrate &&
                !jsrc::contains_token_sequence(outcome.output_text,
                                               "createVibration(3, 9 / 3)")) {
              return outcome.target + ": missing createVibration(3, 9 / 3)";
            }
          }
          (is_raf ? saw_raf : saw_vibrate) = true;
        }
        if (!saw_raf || !saw_vibrate) return "fixture entries missing";
        return "";
      });

  criterion(
      "equivalent scripts: the field-resolved and inline examples generate "
      "structurally equal scripts",
      [&]() -> std::string {
        ApiMapping mapping =
            load_mapping(kCorpusDir + "/mappings/setAudioStreamType.mapping");
        script::UpdateScript a = script::generate_script(
            jsrc::parse(file_in_corpus("cases/SetAudioStreamTypeFieldExample.java")),
            mapping);
        script::UpdateScript b = script::generate_script(
            jsrc::parse(file_in_corpus("cases/SetAudioStreamTypeInlineExample.java")),
            mapping);
        if (!script::scripts_structurally_equal(a, b)) {
          return "scripts differ:\n" + script::serialize_script(a) + "----\n" +
                 script::serialize_script(b);
        }
        if (script::serialize_script(a) != script::serialize_script(b)) {
          return "serialized forms differ";
        }
        return "";
      });

  criterion(
      "idempotence: a second application changes zero bytes on every corpus "
      "target",
      [&]() -> std::string {
        for (const corpus::EntrySummary& entry : summary.entries) {
          script::UpdateScript update = script::parse_script(entry.script_text);
          for (const corpus::TargetOutcome& outcome : entry.outcomes) {
            jsrc::SourceUnit once =
                jsrc::parse(outcome.output_text, outcome.target);
            script::ApplyResult again = script::apply_script(update, once);
            if (again.unit.text != outcome.output_text) {
              return outcome.target + ": second application changed bytes";
            }
            if (again.report.updated() != 0) {
              return outcome.target + ": second application updated again";
            }
          }
        }
        return "";
      });

  criterion(
      "data-flow oracle: 200/200 random constant chains resolve to the "
      "interpreter's value",
      [&]() -> std::string {
        std::mt19937 rng(20260809);
        int passed = 0;
        for (int round = 0; round < 200; ++round) {
          generators::ChainCase chain =
              generators::random_chain(rng, round % 2 == 1);
          jsrc::SourceUnit unit = jsrc::parse(chain.text);
          ApiSignature use;
          use.method = "use";
          use.param_types.resize(1);
          auto calls = find_invocations(unit, use);
          if (calls.size() != 1) return "fixture generation broke";
          jsrc::NodeId arg = unit.node(calls[0]).children[0];
          flow::ResolvedValue value =
              flow::resolve_expression(unit, arg, std::nullopt);
          if (!value.unresolved.empty()) {
            return "round " + std::to_string(round) + ": unresolved names";
          }
          long expected = oracles::run_chain(chain.statements).at(chain.final_var);
          long got = oracles::fold_int(value.expression);
          if (got != expected) {
            return "round " + std::to_string(round) + ": " + value.expression +
                   " folds to " + std::to_string(got) + ", oracle says " +
                   std::to_string(expected);
          }
          ++passed;
        }
        return passed == 200 ? "" : "short count";
      });

  criterion(
      "normalization round trip: 100/100 pure sites come back token-identical "
      "and duplication-risk fixtures keep their side-effect counts",
      [&]() -> std::string {
        std::mt19937 rng(7);
        for (int round = 0; round < 100; ++round) {
          generators::PureSiteCase site = generators::random_pure_site(rng);
          jsrc::SourceUnit unit = jsrc::parse(site.text);
          ApiSignature sig;
          sig.method = site.call;
          sig.param_types.resize(site.arity);
          auto calls = find_invocations(unit, sig);
          if (calls.size() != 1) return "fixture generation broke";
          auto normalized = norm::normalize_invocation(unit, calls[0], site.types);
          std::vector<norm::NormalizationRecord> records{normalized.record};
          norm::DenormalizeResult back =
              norm::denormalize_unit(normalized.unit, &records);
          if (jsrc::token_texts(back.unit.text) != jsrc::token_texts(site.text)) {
            return "round " + std::to_string(round) + " diverged:\n" +
                   back.unit.text;
          }
        }

        // Duplication risk: an effectful temp read twice in each branch.
        std::string risky =
            "class A {\n"
            "    void m(boolean flag) {\n"
            "        int parameterVariable0 = compute();\n"
            "        if (flag) {\n"
            "            use(parameterVariable0, parameterVariable0);\n"
            "        } else {\n"
            "            report(parameterVariable0, parameterVariable0);\n"
            "        }\n"
            "    }\n"
            "}\n";
        jsrc::SourceUnit unit = jsrc::parse(risky);
        auto count_path = [](const jsrc::SourceUnit& u, bool take_then) {
          int count = 0;
          std::function<void(jsrc::NodeId)> walk = [&](jsrc::NodeId id) {
            const jsrc::Node& n = u.node(id);
            if (n.kind == jsrc::NodeKind::IfStmt) {
              walk(n.children[0]);
              if (take_then) {
                walk(n.children[1]);
              } else if (n.has_else) {
                walk(n.children[2]);
              }
              return;
            }
            if (n.kind == jsrc::NodeKind::MethodInvocation) ++count;
            for (jsrc::NodeId c : n.children) walk(c);
          };
          walk(u.root);
          return count;
        };
        int then_before = count_path(unit, true);
        int else_before = count_path(unit, false);
        norm::DenormalizeResult denorm = norm::denormalize_unit(unit);
        if (count_path(denorm.unit, true) != then_before ||
            count_path(denorm.unit, false) != else_before) {
          return "denormalization changed a path's side-effect count";
        }
        return "";
      });

  criterion(
      "readability direction: the denormalized update outscores the "
      "normalized one on every temp-bearing corpus target, and the score is "
      "monotone on 50 random fixtures",
      [&]() -> std::string {
        for (std::size_t e = 0; e < summary.entries.size(); ++e) {
          const corpus::EntrySummary& entry = summary.entries[e];
          ApiMapping mapping = load_mapping(
              kCorpusDir + "/" + corpus_run.manifest.entries[e].mapping);
          for (const corpus::TargetOutcome& outcome : entry.outcomes) {
            bool has_temp = false;
            for (const std::string& tok :
                 jsrc::token_texts(outcome.normalized_text)) {
              if (norm::is_scheme_name(tok)) {
                has_temp = true;
                break;
              }
            }
            if (!has_temp) continue;
            double normalized = mean_slice_score(outcome.normalized_text, mapping);
            double denormalized = mean_slice_score(outcome.output_text, mapping);
            if (!(denormalized > normalized)) {
              return outcome.target + ": denormalized " +
                     std::to_string(denormalized) + " <= normalized " +
                     std::to_string(normalized);
            }
          }
        }
        std::mt19937 rng(99);
        for (int round = 0; round < 50; ++round) {
          std::string body = generators::random_slice_body(rng);
          double before =
              readability::score_readability(generators::wrap_slice(body)).value;
          body += "        int unusedExtra" + std::to_string(round) + " = 0;\n";
          double after =
              readability::score_readability(generators::wrap_slice(body)).value;
          if (!(after < before)) {
            return "monotonicity failed on fixture " + std::to_string(round);
          }
        }
        return "";
      });

  criterion(
      "timing: mean creation and application phases stay under 15 s per "
      "mapping",
      [&]() -> std::string {
        for (const corpus::EntrySummary& entry : summary.entries) {
          if (entry.mean_creation_ms >= 15000.0) {
            return entry.api + ": creation took " +
                   std::to_string(entry.mean_creation_ms) + " ms";
          }
          if (entry.mean_application_ms >= 15000.0) {
            return entry.api + ": application took " +
                   std::to_string(entry.mean_application_ms) + " ms";
          }
        }
        return "";
      });

  criterion(
      "failure modes: out-of-file example, duplicate-in-statement target and "
      "pre-guarded target are reported as such in JSON",
      [&]() -> std::string {
        // Out-of-file variable in the example (report JSON via the corpus).
        corpus::CorpusManifest failures =
            corpus::load_manifest(kCorpusDir + "/manifest_failures.json");
        corpus::RunSummary failed_run = corpus::run_corpus(failures);
        nlohmann::json fail_json =
            nlohmann::json::parse(corpus::summary_to_json(failed_run));
        if (fail_json["entries"].size() != 1) return "failure manifest shape";
        std::string reason = fail_json["entries"][0].value("generation_error", "");
        if (reason.find("external-to-file") == std::string::npos) {
          return "missing external-to-file reason, got: " + reason;
        }
        if (fail_json["entries"][0]["failed"] != 1) {
          return "entry not reported failed";
        }
        try {
          script::generate_script(
              jsrc::parse(file_in_corpus("cases/OutOfFileExample.java")),
              load_mapping(kCorpusDir + "/cases/addGpsStatusListener.mapping"));
          return "expected UnresolvedNewArgument";
        } catch (const GenerateError& e) {
          if (e.kind() != GenerateError::Kind::UnresolvedNewArgument) {
            return "wrong generation error kind";
          }
        }

        // Duplicate invocations in one statement.
        ApiMapping hour =
            load_mapping(kCorpusDir + "/mappings/getCurrentHour.mapping");
        script::UpdateScript hour_script = script::generate_script(
            jsrc::parse(file_in_corpus("examples/GetCurrentHourExample.java")),
            hour);
        script::ApplyResult dup = script::apply_script(
            hour_script,
            jsrc::parse(file_in_corpus("cases/DuplicateInStatementTarget.java")));
        nlohmann::json dup_json =
            nlohmann::json::parse(script::report_to_json(dup.report));
        if (dup_json["counts"]["skipped-duplicate-in-statement"] != 1) {
          return "duplicate site not reported";
        }
        if (dup_json["counts"]["updated"] != 1) {
          return "first duplicate site not updated";
        }

        // Pre-guarded target.
        ApiMapping minute =
            load_mapping(kCorpusDir + "/mappings/getCurrentMinute.mapping");
        script::UpdateScript minute_script = script::generate_script(
            jsrc::parse(file_in_corpus("examples/GetCurrentMinuteExample.java")),
            minute);
        std::string guarded = file_in_corpus("cases/GuardedTarget.java");
        script::ApplyResult skipped =
            script::apply_script(minute_script, jsrc::parse(guarded));
        nlohmann::json skip_json =
            nlohmann::json::parse(script::report_to_json(skipped.report));
        if (skip_json["counts"]["skipped-already-guarded"] != 1) {
          return "guarded site not reported";
        }
        if (skipped.unit.text != guarded) return "guarded target was modified";
        return "";
      });

  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return 1;
}
