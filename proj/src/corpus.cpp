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

#include "apievolve/corpus.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "apievolve/errors.hpp"
#include "apievolve/parse.hpp"
#include "apievolve/token.hpp"
#include "json.hpp"

namespace apievolve::corpus {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string resolve(const std::string& base, const std::string& path) {
  fs::path p(path);
  if (p.is_absolute()) return path;
  return (fs::path(base) / p).string();
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

CorpusManifest load_manifest(const std::string& path) {
  CorpusManifest manifest;
  manifest.base_dir = fs::path(path).parent_path().string();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("malformed manifest " + path + ": " + e.what());
  }
  if (!doc.is_array()) {
    throw std::runtime_error("manifest must be a JSON list of entries");
  }
  for (const auto& item : doc) {
    CorpusEntry entry;
    entry.mapping = item.at("mapping").get<std::string>();
    entry.example = item.at("example").get<std::string>();
    for (const auto& t : item.at("targets")) {
      entry.targets.push_back(t.get<std::string>());
    }
    if (item.contains("expected")) {
      for (const auto& t : item.at("expected")) {
        entry.expected.push_back(t.get<std::string>());
      }
      if (!entry.expected.empty() &&
          entry.expected.size() != entry.targets.size()) {
        throw std::runtime_error(
            "expected[] must match targets[] in length when present");
      }
    }
    manifest.entries.push_back(std::move(entry));
  }
  return manifest;
}

std::size_t RunSummary::total(std::size_t EntrySummary::* field) const {
  std::size_t sum = 0;
  for (const EntrySummary& e : entries) sum += e.*field;
  return sum;
}

EntrySummary run_entry(const CorpusEntry& entry, const std::string& base_dir,
                       const RunOptions& options) {
  EntrySummary summary;
  summary.targets = entry.targets.size();

  ApiMapping mapping;
  script::UpdateScript update;
  double creation_ms = 0.0;
  try {
    auto start = Clock::now();
    mapping = load_mapping(resolve(base_dir, entry.mapping));
    summary.api = mapping.deprecated.to_string();
    jsrc::SourceUnit example = jsrc::parse(
        read_file(resolve(base_dir, entry.example)), entry.example);
    script::UpdateScript generated = script::generate_script(example, mapping);
    summary.script_text = script::serialize_script(generated);
    // Run the script through its textual form, as a file-based run would.
    update = script::parse_script(summary.script_text);
    creation_ms = ms_since(start);
  } catch (const std::exception& e) {
    summary.generation_failed = true;
    summary.failure_reason = e.what();
    if (summary.api.empty()) summary.api = entry.mapping;
    summary.failed = entry.targets.size();
    for (const std::string& t : entry.targets) {
      TargetOutcome outcome;
      outcome.target = t;
      outcome.report.target = t;
      outcome.report.diagnostics.push_back("script creation failed: " +
                                           summary.failure_reason);
      summary.outcomes.push_back(std::move(outcome));
    }
    return summary;
  }
  summary.mean_creation_ms = creation_ms;

  double application_total = 0.0;
  for (std::size_t i = 0; i < entry.targets.size(); ++i) {
    const std::string& target_rel = entry.targets[i];
    std::string target_path = resolve(base_dir, target_rel);
    TargetOutcome outcome;
    outcome.target = target_rel;
    try {
      jsrc::SourceUnit target =
          jsrc::parse(read_file(target_path), target_rel);
      auto start = Clock::now();
      script::ApplyOptions apply_options;
      apply_options.denormalize = options.denormalize;
      script::ApplyResult applied =
          script::apply_script(update, target, apply_options);
      double app_ms = ms_since(start);
      application_total += app_ms;
      outcome.report = std::move(applied.report);
      outcome.report.creation_ms = creation_ms;
      outcome.report.application_ms = app_ms;
      outcome.output_text = applied.unit.text;
      outcome.normalized_text = applied.normalized_text;

      if (i < entry.expected.size() && !entry.expected[i].empty()) {
        outcome.expectation_checked = true;
        std::string expected_text =
            read_file(resolve(base_dir, entry.expected[i]));
        outcome.expectation_matched =
            jsrc::token_texts(outcome.output_text) ==
            jsrc::token_texts(expected_text);
      }
      if (options.write_outputs && outcome.report.updated() > 0) {
        write_file(target_path, outcome.output_text);
      }
    } catch (const std::exception& e) {
      outcome.report.target = target_rel;
      outcome.report.diagnostics.push_back(e.what());
      outcome.expectation_matched = false;
      script::InvocationResult failed;
      failed.outcome = script::Outcome::Failed;
      failed.diagnostics.push_back(e.what());
      outcome.report.invocations.push_back(std::move(failed));
    }

    bool any_failed = outcome.report.failed() > 0 || !outcome.expectation_matched;
    bool any_updated = outcome.report.updated() > 0;
    bool any_skipped = outcome.report.skipped() > 0;
    if (any_failed) {
      ++summary.failed;
    } else if (any_updated) {
      ++summary.updated;
    } else if (any_skipped) {
      ++summary.skipped;
    } else {
      ++summary.failed;
      outcome.report.diagnostics.push_back("no matching invocation in target");
    }
    summary.outcomes.push_back(std::move(outcome));
  }
  if (!entry.targets.empty()) {
    summary.mean_application_ms =
        application_total / static_cast<double>(entry.targets.size());
  }
  return summary;
}

RunSummary run_corpus(const CorpusManifest& manifest, const RunOptions& options) {
  RunSummary summary;
  for (const CorpusEntry& entry : manifest.entries) {
    EntrySummary e = run_entry(entry, manifest.base_dir, options);
    if (e.generation_failed) summary.all_expectations_met = false;
    for (const TargetOutcome& t : e.outcomes) {
      if (!t.expectation_matched || t.report.failed() > 0) {
        summary.all_expectations_met = false;
      }
    }
    summary.entries.push_back(std::move(e));
  }
  return summary;
}

std::string summary_to_json(const RunSummary& summary, bool zero_timing) {
  nlohmann::ordered_json j;
  j["entries"] = nlohmann::ordered_json::array();
  for (const EntrySummary& e : summary.entries) {
    nlohmann::ordered_json entry;
    entry["api"] = e.api;
    entry["targets"] = e.targets;
    entry["updated"] = e.updated;
    entry["skipped"] = e.skipped;
    entry["failed"] = e.failed;
    entry["mean_phase_ms"]["creation"] = zero_timing ? 0.0 : e.mean_creation_ms;
    entry["mean_phase_ms"]["application"] =
        zero_timing ? 0.0 : e.mean_application_ms;
    if (e.generation_failed) entry["generation_error"] = e.failure_reason;
    entry["targets_detail"] = nlohmann::ordered_json::array();
    for (const TargetOutcome& t : e.outcomes) {
      nlohmann::ordered_json detail = nlohmann::ordered_json::parse(
          script::report_to_json(t.report));
      if (zero_timing) {
        detail["phase_ms"]["creation"] = 0.0;
        detail["phase_ms"]["application"] = 0.0;
      }
      if (t.expectation_checked) {
        detail["expected_match"] = t.expectation_matched;
      }
      entry["targets_detail"].push_back(detail);
    }
    j["entries"].push_back(entry);
  }
  j["totals"]["targets"] = summary.total(&EntrySummary::targets);
  j["totals"]["updated"] = summary.total(&EntrySummary::updated);
  j["totals"]["skipped"] = summary.total(&EntrySummary::skipped);
  j["totals"]["failed"] = summary.total(&EntrySummary::failed);
  j["all_expectations_met"] = summary.all_expectations_met;
  return j.dump(2);
}

std::string summary_table(const RunSummary& summary) {
  std::ostringstream out;
  out << "API                                               targets  updated  skipped  failed  create-ms  apply-ms\n";
  for (const EntrySummary& e : summary.entries) {
    char line[256];
    std::snprintf(line, sizeof(line), "%-49s %7zu %8zu %8zu %7zu %10.1f %9.1f\n",
                  e.api.c_str(), e.targets, e.updated, e.skipped, e.failed,
                  e.mean_creation_ms, e.mean_application_ms);
    out << line;
  }
  return out.str();
}

}  // namespace apievolve::corpus
