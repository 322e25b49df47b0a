// Copyright 2026 The typecorpus Authors
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

#ifndef TYPECORPUS_PIPELINE_HPP_
#define TYPECORPUS_PIPELINE_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "typecorpus/dedup.hpp"
#include "typecorpus/records.hpp"

namespace typecorpus {

// Exit codes shared by every stage runner.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitPartial = 2;  // some files could not be parsed
inline constexpr int kExitFatal = 3;

struct PipelineOptions {
  std::filesystem::path manifest;
  std::filesystem::path out;
  std::uint64_t seed = 42;
  std::size_t k = 10;
  double threshold = 0.95;
  std::array<double, 3> ratios{0.7, 0.1, 0.2};
  std::size_t jobs = 1;

  // Stage inputs that default to locations under `out` when left empty.
  std::filesystem::path repos_root;      // default: out/repos
  std::filesystem::path split_csv;       // default: out/split.csv
  std::filesystem::path duplicates;      // default: out/duplicates.jsonl
  std::filesystem::path processed_dir;   // default: out/processed_projects
  std::filesystem::path src_root;        // default: repos_root (for sloc)

  std::filesystem::path repos_root_or_default() const;
  std::filesystem::path split_csv_or_default() const;
  std::filesystem::path duplicates_or_default() const;
  std::filesystem::path processed_dir_or_default() const;
  std::filesystem::path manifest_copy() const;   // out/manifest.txt
  std::filesystem::path bundle_path() const;     // out/dataset.zip
};

// One analyzed source file; `ok` is false for undecodable or unparseable
// input, with the reason in `error`.
struct AnalyzedFile {
  std::string project;    // "author/repo"
  std::string relative;   // repo-relative path
  std::string identity;   // project + "/" + relative
  bool ok = false;
  std::string error;
  ModuleRecord record;
  TermCounts terms;
  std::size_t sloc = 0;
};

// Runs `fn(i)` for i in [0, n) across at most `jobs` worker threads; `fn`
// must be thread-safe and writes results by index so output order never
// depends on scheduling.
void parallel_for_index(std::size_t n, std::size_t jobs,
                        const std::function<void(std::size_t)>& fn);

// Parses and extracts every discovered source file under `repos_root`
// (author/repo/... layout). Output is ordered by identity.
std::vector<AnalyzedFile> analyze_corpus(const std::filesystem::path& repos_root,
                                         std::size_t jobs);

// Stage runners. Each reads the prior stage's file outputs, writes its own
// under options.out, logs a summary to `log`, and returns an exit code.
int run_fetch(const PipelineOptions& options, std::ostream& log);
int run_dedup(const PipelineOptions& options, std::ostream& log);
int run_split(const PipelineOptions& options, std::ostream& log);
int run_process(const PipelineOptions& options, std::ostream& log);
int run_stats(const PipelineOptions& options, std::ostream& log);
int run_bundle(const PipelineOptions& options, std::ostream& log);
int run_all(const PipelineOptions& options, std::ostream& log);

}  // namespace typecorpus

#endif  // TYPECORPUS_PIPELINE_HPP_
