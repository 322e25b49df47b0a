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

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "typecorpus/pipeline.hpp"

namespace {

using typecorpus::PipelineOptions;

// Binds the shared stage flags to `options`; individual subcommands add the
// flags they understand so `--help` stays honest per stage.
struct FlagBinder {
  CLI::App* cmd;
  PipelineOptions& options;
  std::vector<double>& ratios;

  void out(bool required = true) {
    auto* opt = cmd->add_option("--out", options.out,
                                "Output directory for stage artifacts");
    if (required) opt->required();
  }
  void manifest(bool required) {
    auto* opt = cmd->add_option(
        "--manifest", options.manifest,
        "Manifest of repository URLs and pinned commit hashes");
    if (required) opt->required();
  }
  void repos() {
    cmd->add_option("--repos", options.repos_root,
                    "Root of fetched repositories (default: <out>/repos)");
  }
  void jobs() {
    cmd->add_option("--jobs", options.jobs, "Worker threads for file analysis")
        ->check(CLI::Range(std::size_t{1}, std::size_t{256}));
  }
  void dedup_params() {
    cmd->add_option("--k", options.k, "Nearest neighbors per file")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--threshold", options.threshold,
                    "Cosine similarity threshold for duplicates")
        ->check(CLI::Range(0.0, 1.0));
  }
  void split_params() {
    cmd->add_option("--seed", options.seed, "Shuffle seed");
    cmd->add_option("--ratios", ratios,
                    "Train,valid,test ratios (e.g. 0.7,0.1,0.2)")
        ->delimiter(',')
        ->expected(3);
  }
  void split_csv() {
    cmd->add_option("--split-csv", options.split_csv,
                    "Split assignment CSV (default: <out>/split.csv)");
  }
  void duplicates() {
    cmd->add_option("--duplicates", options.duplicates,
                    "Duplicate clusters file (default: <out>/duplicates.jsonl)");
  }
  void processed() {
    cmd->add_option("--processed", options.processed_dir,
                    "Directory of emitted project JSON documents "
                    "(default: <out>/processed_projects)");
  }
  void src() {
    cmd->add_option("--src", options.src_root,
                    "Source tree used for line counting (default: --repos)");
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "typecorpus: builds an ML-ready type-annotation dataset from a corpus "
      "of Python repositories"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from an INI/TOML file");

  PipelineOptions options;
  std::vector<double> ratios;

  CLI::App* fetch = app.add_subcommand(
      "fetch", "Clone manifest repositories at their pinned commits");
  {
    FlagBinder bind{fetch, options, ratios};
    bind.manifest(true);
    bind.out();
    bind.repos();
  }

  CLI::App* dedup = app.add_subcommand(
      "dedup", "Detect near-duplicate source files across the corpus");
  {
    FlagBinder bind{dedup, options, ratios};
    bind.out();
    bind.repos();
    bind.jobs();
    bind.dedup_params();
  }

  CLI::App* split = app.add_subcommand(
      "split", "Assign deduplicated files to train/valid/test sets");
  {
    FlagBinder bind{split, options, ratios};
    bind.out();
    bind.repos();
    bind.jobs();
    bind.split_params();
    bind.duplicates();
  }

  CLI::App* process = app.add_subcommand(
      "process", "Extract per-file records and emit project JSON documents");
  {
    FlagBinder bind{process, options, ratios};
    bind.out();
    bind.repos();
    bind.jobs();
    bind.split_csv();
  }

  CLI::App* stats = app.add_subcommand(
      "stats", "Compute corpus statistics from emitted project documents");
  {
    FlagBinder bind{stats, options, ratios};
    bind.out();
    bind.processed();
    bind.src();
    bind.repos();
  }

  CLI::App* bundle = app.add_subcommand(
      "bundle", "Assemble the four-part dataset archive");
  {
    FlagBinder bind{bundle, options, ratios};
    bind.out();
    bind.manifest(false);
    bind.processed();
    bind.duplicates();
    bind.split_csv();
  }

  CLI::App* all = app.add_subcommand(
      "all", "Run the full pipeline: fetch, dedup, split, process, stats, "
             "bundle");
  {
    FlagBinder bind{all, options, ratios};
    bind.manifest(false);
    bind.out();
    bind.repos();
    bind.jobs();
    bind.dedup_params();
    bind.split_params();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error);
    return code == 0 ? typecorpus::kExitOk : typecorpus::kExitUsage;
  }

  if (!ratios.empty()) {
    options.ratios = {ratios[0], ratios[1], ratios[2]};
  }

  try {
    if (app.got_subcommand(fetch)) return typecorpus::run_fetch(options, std::cout);
    if (app.got_subcommand(dedup)) return typecorpus::run_dedup(options, std::cout);
    if (app.got_subcommand(split)) return typecorpus::run_split(options, std::cout);
    if (app.got_subcommand(process)) return typecorpus::run_process(options, std::cout);
    if (app.got_subcommand(stats)) return typecorpus::run_stats(options, std::cout);
    if (app.got_subcommand(bundle)) return typecorpus::run_bundle(options, std::cout);
    if (app.got_subcommand(all)) return typecorpus::run_all(options, std::cout);
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return typecorpus::kExitFatal;
  }
  return typecorpus::kExitUsage;
}
