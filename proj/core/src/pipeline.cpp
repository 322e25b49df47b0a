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
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "typecorpus/discover.hpp"
#include "typecorpus/emit.hpp"
#include "typecorpus/errors.hpp"
#include "typecorpus/extract.hpp"
#include "typecorpus/fetch.hpp"
#include "typecorpus/manifest.hpp"
#include "typecorpus/pyparse.hpp"
#include "typecorpus/seq.hpp"
#include "typecorpus/source_text.hpp"
#include "typecorpus/split.hpp"
#include "typecorpus/stats.hpp"

namespace typecorpus {
namespace fs = std::filesystem;

namespace {

AnalyzedFile analyze_one(const SourceFileEntry& entry) {
  AnalyzedFile out;
  out.project = entry.project;
  out.relative = entry.relative_path;
  out.identity = entry.project + "/" + entry.relative_path;

  const DecodedSource source = read_source_file(entry.absolute_path);
  if (!source.ok) {
    out.error = source.error;
    return out;
  }
  const py::LexResult lexed = py::lex(source.text);
  if (!lexed.ok) {
    out.error = lexed.error + " (line " + std::to_string(lexed.error_line) + ")";
    return out;
  }
  py::ParseResult parsed = py::parse(lexed.tokens);
  if (!parsed.ok) {
    out.error =
        parsed.error + " (line " + std::to_string(parsed.error_line) + ")";
    return out;
  }

  out.record = extract_module(*parsed.module, lexed.tokens, source.text);
  out.record.file_path = entry.relative_path;
  const TokenSequencePair pair = align_types(*parsed.module, lexed.tokens);
  out.record.untyped_seq = join_sequence(pair.untyped_seq);
  out.record.typed_seq = join_sequence(pair.typed_seq);

  std::set<std::size_t> covered_lines;
  for (const py::Token& tok : lexed.tokens) {
    switch (tok.kind) {
      case py::TokenKind::Comment:
      case py::TokenKind::Newline:
      case py::TokenKind::Indent:
      case py::TokenKind::Dedent:
      case py::TokenKind::EndOfFile:
        break;
      case py::TokenKind::Name:
        ++out.terms[tok.text];
        [[fallthrough]];
      default:
        for (std::size_t line = tok.line; line <= tok.end_line; ++line) {
          covered_lines.insert(line);
        }
        break;
    }
  }
  out.sloc = covered_lines.size();
  out.ok = true;
  return out;
}

std::vector<SourceFileEntry> discover_projects(const fs::path& repos_root) {
  std::vector<SourceFileEntry> entries;
  if (!fs::is_directory(repos_root)) {
    throw IoError("repository root does not exist: " + repos_root.string());
  }
  std::vector<std::string> authors;
  for (const auto& item : fs::directory_iterator(repos_root)) {
    if (item.is_directory() && item.path().filename().string().front() != '.') {
      authors.push_back(item.path().filename().string());
    }
  }
  std::sort(authors.begin(), authors.end());
  for (const std::string& author : authors) {
    std::vector<std::string> repos;
    for (const auto& item : fs::directory_iterator(repos_root / author)) {
      if (item.is_directory() &&
          item.path().filename().string().front() != '.') {
        repos.push_back(item.path().filename().string());
      }
    }
    std::sort(repos.begin(), repos.end());
    for (const std::string& repo : repos) {
      const std::string project = author + "/" + repo;
      for (SourceFileEntry& entry :
           discover_source_files(repos_root / author / repo, project)) {
        entries.push_back(std::move(entry));
      }
    }
  }
  return entries;
}

std::size_t count_failures(const std::vector<AnalyzedFile>& files) {
  std::size_t failures = 0;
  for (const AnalyzedFile& file : files) {
    if (!file.ok) ++failures;
  }
  return failures;
}

void log_summary(const std::vector<AnalyzedFile>& files, std::ostream& log) {
  const std::size_t failures = count_failures(files);
  for (const AnalyzedFile& file : files) {
    if (!file.ok) log << "parse failure: " << file.identity << ": "
                      << file.error << '\n';
  }
  log << "files analyzed: " << files.size() << '\n';
  log << "parse failures: " << failures << '\n';
}

std::vector<std::vector<std::string>> read_duplicate_clusters(
    const fs::path& path) {
  const std::string text = read_file_bytes(path);
  std::vector<std::vector<std::string>> clusters;
  std::istringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) {
    if (line.empty()) continue;
    const nlohmann::json parsed = nlohmann::json::parse(line);
    std::vector<std::string> members;
    for (const auto& member : parsed) {
      members.push_back(member.get<std::string>());
    }
    clusters.push_back(std::move(members));
  }
  return clusters;
}

// Every cluster member except the representative (lexicographically first).
std::set<std::string> removed_by_dedup(
    const std::vector<std::vector<std::string>>& clusters) {
  std::set<std::string> removed;
  for (const std::vector<std::string>& members : clusters) {
    if (members.empty()) continue;
    const std::string representative =
        *std::min_element(members.begin(), members.end());
    for (const std::string& member : members) {
      if (member != representative) removed.insert(member);
    }
  }
  return removed;
}

DedupResult run_dedup_on(const std::vector<AnalyzedFile>& files,
                         const PipelineOptions& options, std::ostream& log) {
  std::vector<std::pair<std::string, TermCounts>> corpus;
  corpus.reserve(files.size());
  for (const AnalyzedFile& file : files) {
    if (file.ok) corpus.emplace_back(file.identity, file.terms);
  }
  DedupResult result = detect_duplicates(corpus, options.k, options.threshold);

  std::string jsonl;
  for (const DuplicateCluster& cluster : result.clusters) {
    jsonl += nlohmann::json(cluster.members).dump();
    jsonl += '\n';
  }
  write_file_bytes(options.duplicates_or_default(), jsonl);

  nlohmann::ordered_json report = nlohmann::ordered_json::object();
  report["total_files"] = result.report.total_files;
  report["duplicate_files"] = result.report.duplicate_files;
  report["clusters"] = result.report.clusters;
  report["avg_files_per_cluster"] = result.report.avg_files_per_cluster;
  report["median_files_per_cluster"] = result.report.median_files_per_cluster;
  report["duplication_ratio_pct"] = result.report.duplication_ratio_pct;
  report["removed_files"] = result.report.removed_files;
  write_file_bytes(options.out / "dedup_report.json", report.dump(2) + "\n");

  log << "duplicate clusters: " << result.report.clusters << '\n';
  log << "duplicate files removed: " << result.report.removed_files << '\n';
  return result;
}

SplitAssignment run_split_on(const std::vector<AnalyzedFile>& files,
                             const std::set<std::string>& removed,
                             const PipelineOptions& options, std::ostream& log) {
  std::vector<std::string> kept;
  for (const AnalyzedFile& file : files) {
    if (file.ok && !removed.count(file.identity)) {
      kept.push_back(file.identity);
    }
  }
  SplitAssignment assignment =
      assign_splits(std::move(kept), options.ratios, options.seed);
  write_split_csv(assignment, options.split_csv_or_default());

  std::array<std::size_t, 3> counts{0, 0, 0};
  for (const auto& [file, label] : assignment.entries) {
    if (label == SetLabel::Train) ++counts[0];
    if (label == SetLabel::Valid) ++counts[1];
    if (label == SetLabel::Test) ++counts[2];
  }
  log << "split sizes: train " << counts[0] << ", valid " << counts[1]
      << ", test " << counts[2] << '\n';
  return assignment;
}

std::vector<ProjectRecord> emit_processed(
    const std::vector<AnalyzedFile>& files,
    const std::map<std::string, SetLabel>& labels,
    const PipelineOptions& options, std::ostream& log) {
  std::map<std::string, ProjectRecord> projects;
  for (const AnalyzedFile& file : files) {
    if (!file.ok) continue;
    ProjectRecord& project = projects[file.project];
    if (project.author.empty()) {
      const auto slash = file.project.find('/');
      project.author = file.project.substr(0, slash);
      project.repo = file.project.substr(slash + 1);
    }
    const auto label = labels.find(file.identity);
    if (label == labels.end()) continue;  // removed as a duplicate
    ModuleRecord record = file.record;
    record.set_label = label->second;
    project.src_files.emplace(file.relative, std::move(record));
  }

  const fs::path processed_dir = options.processed_dir_or_default();
  fs::create_directories(processed_dir);
  std::vector<ProjectRecord> out;
  out.reserve(projects.size());
  for (auto& [name, project] : projects) {
    write_file_bytes(processed_dir / project_file_name(project),
                     emit_project_json(project));
    out.push_back(std::move(project));
  }
  log << "projects emitted: " << out.size() << '\n';
  return out;
}

void write_stats_outputs(const std::vector<ProjectRecord>& projects,
                         const std::map<std::string, std::size_t>& sloc_by_file,
                         const PipelineOptions& options, std::ostream& log) {
  const CorpusStats stats = corpus_stats(projects, sloc_by_file);
  write_file_bytes(options.out / "stats.json", stats_to_json(stats).dump(2) + "\n");
  write_file_bytes(options.out / "top_types.csv",
                   render_top_types_csv(top_n_types(projects, 10)));
  log << render_stats_table(stats);
}

std::map<std::string, SetLabel> label_map(const SplitAssignment& assignment) {
  std::map<std::string, SetLabel> labels;
  for (const auto& [file, label] : assignment.entries) {
    labels.emplace(file, label);
  }
  return labels;
}

void copy_manifest(const PipelineOptions& options) {
  if (!options.manifest.empty() && fs::is_regular_file(options.manifest)) {
    write_file_bytes(options.manifest_copy(),
                     read_file_bytes(options.manifest));
  }
}

fs::path bundle_manifest_input(const PipelineOptions& options) {
  if (fs::is_regular_file(options.manifest_copy())) {
    return options.manifest_copy();
  }
  return options.manifest;
}

}  // namespace

fs::path PipelineOptions::repos_root_or_default() const {
  return repos_root.empty() ? out / "repos" : repos_root;
}
fs::path PipelineOptions::split_csv_or_default() const {
  return split_csv.empty() ? out / "split.csv" : split_csv;
}
fs::path PipelineOptions::duplicates_or_default() const {
  return duplicates.empty() ? out / "duplicates.jsonl" : duplicates;
}
fs::path PipelineOptions::processed_dir_or_default() const {
  return processed_dir.empty() ? out / "processed_projects" : processed_dir;
}
fs::path PipelineOptions::manifest_copy() const { return out / "manifest.txt"; }
fs::path PipelineOptions::bundle_path() const { return out / "dataset.zip"; }

void parallel_for_index(std::size_t n, std::size_t jobs,
                        const std::function<void(std::size_t)>& fn) {
  jobs = std::min(std::max<std::size_t>(jobs, 1), n);
  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (std::size_t t = 0; t < jobs; ++t) {
    workers.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
        fn(i);
      }
    });
  }
  for (std::thread& worker : workers) worker.join();
}

std::vector<AnalyzedFile> analyze_corpus(const fs::path& repos_root,
                                         std::size_t jobs) {
  std::vector<SourceFileEntry> entries = discover_projects(repos_root);
  std::vector<AnalyzedFile> results(entries.size());
  parallel_for_index(entries.size(), jobs,
                     [&](std::size_t i) { results[i] = analyze_one(entries[i]); });
  return results;
}

int run_fetch(const PipelineOptions& options, std::ostream& log) {
  const std::vector<ManifestEntry> manifest = load_manifest(options.manifest);
  fs::create_directories(options.out);
  copy_manifest(options);
  const fs::path repos = options.repos_root_or_default();
  fs::create_directories(repos);

  std::size_t failures = 0;
  for (const ManifestEntry& entry : manifest) {
    try {
      fetch_project(entry, repos);
      log << "fetched " << entry.qualified_name() << " @ "
          << entry.commit_hash << '\n';
    } catch (const FetchError& error) {
      ++failures;
      log << "fetch failure: " << entry.qualified_name() << ": "
          << error.what() << '\n';
    }
  }
  log << "projects fetched: " << manifest.size() - failures << " of "
      << manifest.size() << '\n';
  return failures == 0 ? kExitOk : kExitFatal;
}

int run_dedup(const PipelineOptions& options, std::ostream& log) {
  fs::create_directories(options.out);
  const std::vector<AnalyzedFile> files =
      analyze_corpus(options.repos_root_or_default(), options.jobs);
  log_summary(files, log);
  run_dedup_on(files, options, log);
  return count_failures(files) == 0 ? kExitOk : kExitPartial;
}

int run_split(const PipelineOptions& options, std::ostream& log) {
  fs::create_directories(options.out);
  const fs::path duplicates = options.duplicates_or_default();
  if (!fs::is_regular_file(duplicates)) {
    throw MissingInput("duplicates");
  }
  const std::vector<AnalyzedFile> files =
      analyze_corpus(options.repos_root_or_default(), options.jobs);
  log_summary(files, log);
  run_split_on(files, removed_by_dedup(read_duplicate_clusters(duplicates)),
               options, log);
  return count_failures(files) == 0 ? kExitOk : kExitPartial;
}

int run_process(const PipelineOptions& options, std::ostream& log) {
  fs::create_directories(options.out);
  const fs::path split_path = options.split_csv_or_default();
  if (!fs::is_regular_file(split_path)) {
    throw MissingInput("split");
  }
  const std::vector<AnalyzedFile> files =
      analyze_corpus(options.repos_root_or_default(), options.jobs);
  log_summary(files, log);
  emit_processed(files, label_map(read_split_csv(split_path)), options, log);
  return count_failures(files) == 0 ? kExitOk : kExitPartial;
}

int run_stats(const PipelineOptions& options, std::ostream& log) {
  fs::create_directories(options.out);
  const fs::path processed_dir = options.processed_dir_or_default();
  if (!fs::is_directory(processed_dir)) {
    throw MissingInput("processed_projects");
  }
  std::vector<fs::path> project_files;
  for (const auto& item : fs::directory_iterator(processed_dir)) {
    if (item.is_regular_file() && item.path().extension() == ".json") {
      project_files.push_back(item.path());
    }
  }
  std::sort(project_files.begin(), project_files.end());

  std::vector<ProjectRecord> projects;
  projects.reserve(project_files.size());
  for (const fs::path& file : project_files) {
    projects.push_back(parse_project_json(read_file_bytes(file)));
  }

  std::map<std::string, std::size_t> sloc_by_file;
  const fs::path src_root = options.src_root.empty()
                                ? options.repos_root_or_default()
                                : options.src_root;
  if (fs::is_directory(src_root)) {
    for (const ProjectRecord& project : projects) {
      for (const auto& [relative, module] : project.src_files) {
        const fs::path source_path =
            src_root / project.author / project.repo / relative;
        if (!fs::is_regular_file(source_path)) continue;
        const DecodedSource source = read_source_file(source_path);
        if (source.ok) {
          sloc_by_file[project.qualified_name() + "/" + relative] =
              count_sloc(source.text);
        }
      }
    }
  }

  write_stats_outputs(projects, sloc_by_file, options, log);
  return kExitOk;
}

int run_bundle(const PipelineOptions& options, std::ostream& log) {
  write_bundle(options.processed_dir_or_default(),
               bundle_manifest_input(options), options.duplicates_or_default(),
               options.split_csv_or_default(), options.bundle_path());
  log << "bundle written: " << options.bundle_path().string() << '\n';
  return kExitOk;
}

int run_all(const PipelineOptions& options, std::ostream& log) {
  fs::create_directories(options.out);
  if (!options.manifest.empty()) {
    const int fetch_status = run_fetch(options, log);
    if (fetch_status != kExitOk) return fetch_status;
  }

  const std::vector<AnalyzedFile> files =
      analyze_corpus(options.repos_root_or_default(), options.jobs);
  log_summary(files, log);

  const DedupResult dedup = run_dedup_on(files, options, log);
  std::set<std::string> removed;
  for (const DuplicateCluster& cluster : dedup.clusters) {
    for (const std::string& member : cluster.members) {
      if (member != cluster.representative) removed.insert(member);
    }
  }

  const SplitAssignment assignment = run_split_on(files, removed, options, log);
  const std::vector<ProjectRecord> projects =
      emit_processed(files, label_map(assignment), options, log);

  std::map<std::string, std::size_t> sloc_by_file;
  for (const AnalyzedFile& file : files) {
    if (file.ok) sloc_by_file[file.identity] = file.sloc;
  }
  write_stats_outputs(projects, sloc_by_file, options, log);

  run_bundle(options, log);
  return count_failures(files) == 0 ? kExitOk : kExitPartial;
}

}  // namespace typecorpus
