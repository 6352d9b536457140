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

#include <optional>
#include <string>
#include <vector>

#include "apievolve/apply.hpp"
#include "apievolve/script.hpp"

namespace apievolve::corpus {

struct CorpusEntry {
  std::string mapping;
  std::string example;
  std::vector<std::string> targets;
  std::vector<std::string> expected;  // empty or parallel to targets
};

struct CorpusManifest {
  std::vector<CorpusEntry> entries;
  std::string base_dir;  // resolved relative-path base
};

// JSON list of {mapping, example, targets[], expected?[]}.
CorpusManifest load_manifest(const std::string& path);

struct TargetOutcome {
  std::string target;
  script::UpdateReport report;
  std::string output_text;
  std::string normalized_text;  // pre-denormalization state
  bool expectation_checked = false;
  bool expectation_matched = true;
};

struct EntrySummary {
  std::string api;
  std::size_t targets = 0;
  std::size_t updated = 0;
  std::size_t skipped = 0;
  std::size_t failed = 0;
  double mean_creation_ms = 0.0;
  double mean_application_ms = 0.0;
  bool generation_failed = false;
  std::string failure_reason;
  std::string script_text;
  std::vector<TargetOutcome> outcomes;
};

struct RunSummary {
  std::vector<EntrySummary> entries;
  bool all_expectations_met = true;

  std::size_t total(std::size_t EntrySummary::* field) const;
};

struct RunOptions {
  bool denormalize = true;
  bool write_outputs = false;  // rewrite target files in place
};

EntrySummary run_entry(const CorpusEntry& entry, const std::string& base_dir,
                       const RunOptions& options = {});
RunSummary run_corpus(const CorpusManifest& manifest,
                      const RunOptions& options = {});

// Deterministic JSON (timing fields excluded when zero_timing is set).
std::string summary_to_json(const RunSummary& summary, bool zero_timing = false);
std::string summary_table(const RunSummary& summary);

// Small file helpers shared by the CLI and tests.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace apievolve::corpus
