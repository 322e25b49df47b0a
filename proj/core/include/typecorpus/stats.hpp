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

#ifndef TYPECORPUS_STATS_HPP_
#define TYPECORPUS_STATS_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "typecorpus/records.hpp"

namespace typecorpus {

struct StatsCounters {
  std::uint64_t repositories = 0;
  std::uint64_t sloc = 0;
  std::uint64_t files = 0;
  std::uint64_t files_with_annotations = 0;
  std::uint64_t functions = 0;
  std::uint64_t functions_with_comment = 0;
  std::uint64_t functions_with_ret_type = 0;
  std::uint64_t arguments = 0;
  std::uint64_t arguments_with_comment = 0;
  std::uint64_t arguments_with_annotations = 0;
  std::uint64_t types_total = 0;
  std::uint64_t types_unique = 0;

  friend bool operator==(const StatsCounters&, const StatsCounters&) = default;
};

// Counters for the whole corpus and per split. Repository counts may overlap
// across splits (a repo can contribute files to several sets), so only the
// file-derived fields sum to the "all" bucket.
struct CorpusStats {
  StatsCounters all;
  StatsCounters train;
  StatsCounters valid;
  StatsCounters test;

  friend bool operator==(const CorpusStats&, const CorpusStats&) = default;
};

struct TypeFrequency {
  std::string type_name;
  std::uint64_t occurrences = 0;
  double share_pct = 0.0;
  double cumulative_share_pct = 0.0;
};

// Source lines of code: lines carrying at least one non-comment token.
// Blank and comment-only lines are excluded; multi-line strings (docstrings
// included) count every line they span.
std::size_t count_sloc(std::string_view source_text);

// Aggregates the Table-style counters over complete project records.
// `sloc_by_file` maps "author/repo/relative_path" to a line count; files
// missing from the map contribute zero lines.
CorpusStats corpus_stats(const std::vector<ProjectRecord>& projects,
                         const std::map<std::string, std::size_t>& sloc_by_file);

// Most frequent annotation strings (count desc, name asc) with per-type and
// cumulative shares of all annotation occurrences.
std::vector<TypeFrequency> top_n_types(const std::vector<ProjectRecord>& projects,
                                       std::size_t n);

std::string render_stats_table(const CorpusStats& stats);
nlohmann::ordered_json stats_to_json(const CorpusStats& stats);
std::string render_top_types_csv(const std::vector<TypeFrequency>& types);

}  // namespace typecorpus

#endif  // TYPECORPUS_STATS_HPP_
