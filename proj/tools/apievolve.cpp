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
// apievolve: example-based migration of deprecated Android API usages.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "apievolve/apply.hpp"
#include "apievolve/corpus.hpp"
#include "apievolve/errors.hpp"
#include "apievolve/parse.hpp"
#include "apievolve/readability.hpp"
#include "apievolve/script.hpp"

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;
using namespace apievolve;

namespace {

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int cmd_create_script(const std::string& example_path,
                      const std::string& mapping_path,
                      const std::string& out_path) {
  try {
    ApiMapping mapping = load_mapping(mapping_path);
    jsrc::SourceUnit example =
        jsrc::parse(corpus::read_file(example_path), example_path);
    script::UpdateScript update = script::generate_script(example, mapping);
    corpus::write_file(out_path, script::serialize_script(update));
    for (const std::string& d : update.diagnostics) {
      std::cerr << "note: " << d << "\n";
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_apply(const std::string& script_path, const std::string& target_path,
              std::string out_path, const std::string& report_path) {
  try {
    auto creation_start = Clock::now();
    script::UpdateScript update =
        script::parse_script(corpus::read_file(script_path));
    double creation_ms = ms_since(creation_start);

    jsrc::SourceUnit target =
        jsrc::parse(corpus::read_file(target_path), target_path);
    auto application_start = Clock::now();
    script::ApplyResult result = script::apply_script(update, target);
    result.report.creation_ms = creation_ms;
    result.report.application_ms = ms_since(application_start);

    if (out_path.empty()) out_path = target_path;
    corpus::write_file(out_path, result.unit.text);
    if (!report_path.empty()) {
      corpus::write_file(report_path, script::report_to_json(result.report) + "\n");
    }
    for (const std::string& d : result.report.diagnostics) {
      std::cerr << "note: " << d << "\n";
    }
    bool clean = result.report.updated() > 0 && result.report.failed() == 0 &&
                 result.report.skipped() == 0;
    return clean ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_migrate(const std::string& example_path, const std::string& mapping_path,
                const std::string& targets_dir, const std::string& report_path) {
  try {
    if (!fs::is_directory(targets_dir)) {
      std::cerr << "error: not a directory: " << targets_dir << "\n";
      return 2;
    }
    corpus::CorpusEntry entry;
    entry.mapping = mapping_path;
    entry.example = example_path;
    std::vector<std::string> files;
    for (const auto& item : fs::recursive_directory_iterator(targets_dir)) {
      if (item.is_regular_file() && item.path().extension() == ".java") {
        files.push_back(item.path().string());
      }
    }
    std::sort(files.begin(), files.end());
    entry.targets = files;

    corpus::RunOptions options;
    options.write_outputs = true;
    corpus::EntrySummary summary = corpus::run_entry(entry, "", options);

    corpus::RunSummary run;
    run.entries.push_back(summary);
    if (!report_path.empty()) {
      corpus::write_file(report_path, corpus::summary_to_json(run) + "\n");
    }
    std::cout << corpus::summary_table(run);
    if (summary.generation_failed) {
      std::cerr << "error: " << summary.failure_reason << "\n";
      return 2;
    }
    return summary.failed == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_score(const std::string& before_path, const std::string& after_path,
              const std::string& mapping_path) {
  try {
    ApiMapping mapping = load_mapping(mapping_path);
    auto score_file = [&](const std::string& path) {
      jsrc::SourceUnit unit = jsrc::parse(corpus::read_file(path), path);
      auto slices = readability::slice_api_usages(unit, mapping);
      double sum = 0.0;
      for (const auto& slice : slices) {
        sum += readability::score_readability(slice.wrapped_text).value;
      }
      if (slices.size() > 1) {
        std::cerr << "note: " << path << " has API usages in " << slices.size()
                  << " methods; scores averaged\n";
      }
      return sum / static_cast<double>(slices.size());
    };
    double before = score_file(before_path);
    double after = score_file(after_path);
    std::cout << "before: " << before << "\n"
              << "after: " << after << "\n"
              << "delta: " << (after - before) << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_corpus(const std::string& manifest_path, const std::string& report_path) {
  try {
    corpus::CorpusManifest manifest = corpus::load_manifest(manifest_path);
    corpus::RunSummary summary = corpus::run_corpus(manifest);
    if (!report_path.empty()) {
      corpus::write_file(report_path, corpus::summary_to_json(summary) + "\n");
    }
    std::cout << corpus::summary_table(summary);
    return summary.all_expectations_met ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"example-based migration of deprecated Android API usages"};
  app.require_subcommand(1);

  std::string example, mapping, out, target, script_path, report, targets_dir;
  std::string before, after, manifest;

  CLI::App* create = app.add_subcommand(
      "create-script", "generate an update script from an after-update example");
  create->add_option("--example", example, "after-update example file")->required();
  create->add_option("--mapping", mapping, "API mapping file")->required();
  create->add_option("-o,--out", out, "output script path")->required();

  CLI::App* apply = app.add_subcommand("apply", "apply an update script to a file");
  apply->add_option("--script", script_path, "update script path")->required();
  apply->add_option("--target", target, "target source file")->required();
  apply->add_option("-o,--out", out, "output path (default: in place)");
  apply->add_option("--report", report, "write a JSON report here");

  CLI::App* migrate = app.add_subcommand(
      "migrate", "create a script and apply it to every .java file in a tree");
  migrate->add_option("--example", example, "after-update example file")->required();
  migrate->add_option("--mapping", mapping, "API mapping file")->required();
  migrate->add_option("--targets", targets_dir, "directory of target files")->required();
  migrate->add_option("--report", report, "write a JSON summary here")->required();

  CLI::App* score = app.add_subcommand(
      "score", "compare readability of the API region before and after");
  score->add_option("--before", before, "file before the update")->required();
  score->add_option("--after", after, "file after the update")->required();
  score->add_option("--mapping", mapping, "API mapping file")->required();

  CLI::App* corpus_cmd = app.add_subcommand(
      "corpus", "run a manifest of mappings, examples and targets");
  corpus_cmd->add_option("--manifest", manifest, "corpus manifest JSON")->required();
  corpus_cmd->add_option("--report", report, "write a JSON summary here")->required();

  CLI11_PARSE(app, argc, argv);

  if (create->parsed()) return cmd_create_script(example, mapping, out);
  if (apply->parsed()) return cmd_apply(script_path, target, out, report);
  if (migrate->parsed()) return cmd_migrate(example, mapping, targets_dir, report);
  if (score->parsed()) return cmd_score(before, after, mapping);
  if (corpus_cmd->parsed()) return cmd_corpus(manifest, report);
  return 2;
}
