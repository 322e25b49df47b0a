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

#include "typecorpus/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "support/fixtures.hpp"
#include "support/temp_dir.hpp"
#include "typecorpus/emit.hpp"
#include "typecorpus/errors.hpp"
#include "typecorpus/source_text.hpp"
#include "typecorpus/split.hpp"
#include "typecorpus/zipfile.hpp"

namespace typecorpus {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

void write_source(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path());
  write_file_bytes(path, content);
}

void write_tree(const fs::path& root,
                const std::vector<testing::FixtureFile>& files) {
  for (const testing::FixtureFile& file : files) {
    write_source(root / file.relative_path, file.content);
  }
}

// Two small projects, the first with planted byte-identical duplicates.
fs::path make_corpus(const testing::TempDir& dir) {
  const fs::path root = dir / "repos";
  write_tree(root / "alice" / "alpha", testing::fixture_tree(11, 12, true));
  write_tree(root / "bob" / "beta", testing::fixture_tree(77, 8, false));
  return root;
}

std::vector<std::string> cluster_removals(const fs::path& duplicates_path) {
  std::vector<std::string> removed;
  std::istringstream lines(read_file_bytes(duplicates_path));
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    const auto members = ordered_json::parse(line);
    std::vector<std::string> files;
    for (const auto& member : members) files.push_back(member.get<std::string>());
    const auto keep = std::min_element(files.begin(), files.end());
    for (const std::string& file : files) {
      if (file != *keep) removed.push_back(file);
    }
  }
  return removed;
}

TEST_CASE("parallel_for_index covers every index exactly once") {
  for (const std::size_t jobs : {std::size_t{1}, std::size_t{4}, std::size_t{64}}) {
    std::vector<std::atomic<int>> hits(257);
    parallel_for_index(hits.size(), jobs,
                       [&](std::size_t i) { hits[i].fetch_add(1); });
    for (const auto& hit : hits) CHECK(hit.load() == 1);
  }
  // Degenerate sizes must not hang or call out of range.
  parallel_for_index(0, 8, [](std::size_t) { FAIL("called for n=0"); });
  std::atomic<int> once{0};
  parallel_for_index(1, 8, [&](std::size_t) { once.fetch_add(1); });
  CHECK(once.load() == 1);
}

TEST_CASE("analyze_corpus orders results by identity and fills records") {
  testing::TempDir dir;
  const fs::path root = make_corpus(dir);
  const std::vector<AnalyzedFile> analyzed = analyze_corpus(root, 1);

  REQUIRE(!analyzed.empty());
  CHECK(std::is_sorted(analyzed.begin(), analyzed.end(),
                       [](const AnalyzedFile& a, const AnalyzedFile& b) {
                         return a.identity < b.identity;
                       }));
  std::set<std::string> projects;
  for (const AnalyzedFile& file : analyzed) {
    projects.insert(file.project);
    CHECK(file.identity == file.project + "/" + file.relative);
    CHECK(file.ok);
    CHECK(file.record.file_path == file.relative);
    CHECK_FALSE(file.record.untyped_seq.empty());
    CHECK_FALSE(file.terms.empty());
    CHECK(file.sloc > 0);
  }
  CHECK(projects == std::set<std::string>{"alice/alpha", "bob/beta"});
}

TEST_CASE("analyze_corpus is independent of the worker count") {
  testing::TempDir dir;
  const fs::path root = make_corpus(dir);
  const std::vector<AnalyzedFile> serial = analyze_corpus(root, 1);
  const std::vector<AnalyzedFile> parallel = analyze_corpus(root, 8);

  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].identity == parallel[i].identity);
    CHECK(serial[i].ok == parallel[i].ok);
    CHECK(serial[i].record.untyped_seq == parallel[i].record.untyped_seq);
    CHECK(serial[i].record.typed_seq == parallel[i].record.typed_seq);
    CHECK(serial[i].sloc == parallel[i].sloc);
  }
}

TEST_CASE("analyze_corpus reports legacy files as failures with a line") {
  testing::TempDir dir;
  const fs::path root = dir / "repos";
  write_tree(root / "old" / "timer", {{"good.py", "x = 1\n"}});
  write_source(root / "old" / "timer" / "bad.py",
                   testing::python2_module_source(0));

  const std::vector<AnalyzedFile> analyzed = analyze_corpus(root, 1);
  REQUIRE(analyzed.size() == 2);
  CHECK_FALSE(analyzed[0].ok);  // bad.py sorts first
  CHECK(analyzed[0].error.find("line") != std::string::npos);
  CHECK(analyzed[1].ok);
}

TEST_CASE("the stage chain runs dedup, split, process, stats, and bundle") {
  testing::TempDir dir;
  PipelineOptions options;
  options.out = dir / "out";
  options.repos_root = make_corpus(dir);
  options.seed = 42;
  options.k = 5;
  options.threshold = 0.95;

  std::ostringstream log;

  // split before dedup: the duplicates file is required input.
  CHECK_THROWS_AS(run_split(options, log), MissingInput);
  // process before split: the CSV is required input.
  CHECK_THROWS_AS(run_process(options, log), MissingInput);
  // stats before process: the processed directory is required input.
  CHECK_THROWS_AS(run_stats(options, log), MissingInput);

  REQUIRE(run_dedup(options, log) == kExitOk);
  const fs::path duplicates = options.duplicates_or_default();
  REQUIRE(fs::exists(duplicates));
  const auto report =
      ordered_json::parse(read_file_bytes(dir / "out" / "dedup_report.json"));
  CHECK(report.at("duplicate_files").get<int>() > 0);
  CHECK(report.at("removed_files").get<int>() ==
        report.at("duplicate_files").get<int>() -
            report.at("clusters").get<int>());

  REQUIRE(run_split(options, log) == kExitOk);
  const SplitAssignment assignment =
      read_split_csv(options.split_csv_or_default());
  const std::vector<AnalyzedFile> analyzed =
      analyze_corpus(options.repos_root, 1);
  const std::vector<std::string> removed = cluster_removals(duplicates);
  CHECK(assignment.entries.size() == analyzed.size() - removed.size());
  for (const std::string& file : removed) {
    CHECK(std::none_of(assignment.entries.begin(), assignment.entries.end(),
                       [&](const auto& entry) { return entry.first == file; }));
  }

  REQUIRE(run_process(options, log) == kExitOk);
  const fs::path processed = options.processed_dir_or_default();
  std::map<std::string, SetLabel> labels;
  for (const auto& [file, label] : assignment.entries) labels[file] = label;
  std::size_t modules_seen = 0;
  for (const auto& item : fs::directory_iterator(processed)) {
    const std::string text = read_file_bytes(item.path());
    CHECK(testing::check_project_json_schema(ordered_json::parse(text)) == "");
    const ProjectRecord project = parse_project_json(text);
    for (const auto& [path, module] : project.src_files) {
      ++modules_seen;
      const std::string identity = project.qualified_name() + "/" + path;
      REQUIRE(labels.count(identity) == 1);
      CHECK(module.set_label == labels.at(identity));
    }
  }
  CHECK(modules_seen == assignment.entries.size());

  REQUIRE(run_stats(options, log) == kExitOk);
  const auto stats =
      ordered_json::parse(read_file_bytes(dir / "out" / "stats.json"));
  CHECK(stats.at("all").at("files").get<std::size_t>() ==
        assignment.entries.size());
  CHECK(stats.at("all").at("sloc").get<int>() > 0);
  CHECK(stats.at("all").at("repositories").get<int>() == 2);
  CHECK(fs::exists(dir / "out" / "top_types.csv"));

  write_file_bytes(dir / "out" / "manifest.txt",
                   "https://example.com/alice/alpha " + std::string(40, 'a') +
                       "\n");
  REQUIRE(run_bundle(options, log) == kExitOk);
  const auto entries = list_zip_entries(dir / "out" / "dataset.zip");
  std::set<std::string> names;
  for (const auto& entry : entries) names.insert(entry.name);
  CHECK(names.count("manifest.txt") == 1);
  CHECK(names.count("duplicates.jsonl") == 1);
  CHECK(names.count("split.csv") == 1);
  CHECK(names.count("processed_projects/alice$alpha.json") == 1);
  CHECK(names.count("processed_projects/bob$beta.json") == 1);
}

TEST_CASE("legacy files downgrade the exit code to partial") {
  testing::TempDir dir;
  const fs::path root = dir / "repos";
  write_tree(root / "mixed" / "proj", testing::fixture_tree(5, 6, false));
  write_source(root / "mixed" / "proj" / "legacy_print.py",
                   testing::python2_module_source(0));
  write_source(root / "mixed" / "proj" / "legacy_octal.py",
                   testing::python2_module_source(2));

  PipelineOptions options;
  options.out = dir / "out";
  options.repos_root = root;

  std::ostringstream log;
  CHECK(run_dedup(options, log) == kExitPartial);
  CHECK(run_split(options, log) == kExitPartial);
  CHECK(run_process(options, log) == kExitPartial);
  CHECK(log.str().find("parse failures: 2") != std::string::npos);
  CHECK(log.str().find("legacy_print.py") != std::string::npos);

  // Failed files never reach the split or the processed output.
  const SplitAssignment assignment =
      read_split_csv(options.split_csv_or_default());
  for (const auto& [file, label] : assignment.entries) {
    CHECK(file.find("legacy_") == std::string::npos);
  }
}

TEST_CASE("run_all produces identical bundles for any worker count") {
  testing::TempDir dir;
  const fs::path root = make_corpus(dir);
  const std::string manifest_text =
      "https://example.com/alice/alpha " + std::string(40, 'a') + "\n" +
      "https://example.com/bob/beta " + std::string(40, 'b') + "\n";

  auto run_with_jobs = [&](const fs::path& out, std::size_t jobs) {
    fs::create_directories(out);
    write_file_bytes(out / "manifest.txt", manifest_text);
    PipelineOptions options;
    options.out = out;
    options.repos_root = root;
    options.jobs = jobs;
    std::ostringstream log;
    REQUIRE(run_all(options, log) == kExitOk);
    return read_file_bytes(out / "dataset.zip");
  };

  const std::string serial = run_with_jobs(dir / "out1", 1);
  const std::string parallel = run_with_jobs(dir / "out8", 8);
  CHECK(serial == parallel);
  CHECK(read_file_bytes(dir / "out1" / "stats.json") ==
        read_file_bytes(dir / "out8" / "stats.json"));
  CHECK(read_file_bytes(dir / "out1" / "split.csv") ==
        read_file_bytes(dir / "out8" / "split.csv"));
}

TEST_CASE("run_all on a corpus with legacy files still writes the bundle") {
  testing::TempDir dir;
  const fs::path root = dir / "repos";
  write_tree(root / "mixed" / "proj", testing::fixture_tree(3, 8, false));
  write_source(root / "mixed" / "proj" / "legacy.py",
                   testing::python2_module_source(1));

  const fs::path out = dir / "out";
  fs::create_directories(out);
  write_file_bytes(out / "manifest.txt",
                   "https://example.com/mixed/proj " + std::string(40, 'c') +
                       "\n");

  PipelineOptions options;
  options.out = out;
  options.repos_root = root;
  std::ostringstream log;
  CHECK(run_all(options, log) == kExitPartial);
  CHECK(fs::exists(out / "dataset.zip"));
  CHECK(log.str().find("parse failures: 1") != std::string::npos);
}

}  // namespace
}  // namespace typecorpus
