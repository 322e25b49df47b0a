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

#ifndef TYPECORPUS_DEDUP_HPP_
#define TYPECORPUS_DEDUP_HPP_

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace typecorpus {

// Raw term counts of one document; terms are identifier tokens only.
using TermCounts = std::map<std::string, long long>;

struct DocumentVector {
  std::string file_path;
  std::map<std::string, double> weights;  // term -> tf * idf
  double norm = 0.0;                      // Euclidean norm of weights
};

struct DuplicateCluster {
  std::vector<std::string> members;  // sorted, size >= 2
  std::string representative;        // lexicographically smallest member
};

struct DedupReport {
  std::size_t total_files = 0;
  std::size_t duplicate_files = 0;  // sum of cluster sizes
  std::size_t clusters = 0;
  double avg_files_per_cluster = 0.0;
  double median_files_per_cluster = 0.0;
  double duplication_ratio_pct = 0.0;
  std::size_t removed_files = 0;  // duplicate_files - clusters
};

struct DedupResult {
  std::vector<DuplicateCluster> clusters;
  DedupReport report;
};

using CandidatePair = std::pair<std::string, std::string>;  // first < second

// Counts identifier tokens (keywords, literals, comments, and operators
// excluded), case-preserved. Unlexable tails contribute whatever tokens were
// produced before the error.
TermCounts tokenize_for_dedup(std::string_view source_text);

// TF-IDF with smoothed idf = ln((1+N)/(1+df)) + 1 and raw-count tf. Vector
// order follows the input order; norms are stored, not applied.
std::vector<DocumentVector> build_tfidf(
    const std::vector<std::pair<std::string, TermCounts>>& corpus);

// Cosine similarity clamped to [0, 1]; exactly 1.0 for equal non-zero
// vectors so byte-identical files survive any threshold <= 1.0.
double cosine_similarity(const DocumentVector& a, const DocumentVector& b);

// Exact k-nearest-neighbor candidate search: the pair (a, b) is kept when
// either file lists the other among its k nearest by cosine and the
// similarity clears the threshold. Zero-norm vectors pair with nothing.
std::set<CandidatePair> knn_candidates(const std::vector<DocumentVector>& vectors,
                                       std::size_t k, double threshold);

// Connected components of the candidate graph; singletons excluded, members
// sorted, clusters ordered by representative.
std::vector<DuplicateCluster> form_clusters(const std::set<CandidatePair>& pairs);

// 100 * (duplicate_files - clusters) / total_files.
// Throws DomainError when duplicate_files < clusters.
double duplication_ratio(std::size_t duplicate_files, std::size_t clusters,
                         std::size_t total_files);

DedupReport make_dedup_report(std::size_t total_files,
                              const std::vector<DuplicateCluster>& clusters);

// Full pipeline stage: vectorize, search, cluster, report. The corpus must
// already be sorted by file path.
DedupResult detect_duplicates(
    const std::vector<std::pair<std::string, TermCounts>>& corpus,
    std::size_t k, double threshold);

}  // namespace typecorpus

#endif  // TYPECORPUS_DEDUP_HPP_
