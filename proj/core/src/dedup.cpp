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

#include "typecorpus/dedup.hpp"

#include <algorithm>
#include <cmath>

#include "typecorpus/errors.hpp"
#include "typecorpus/pylex.hpp"

namespace typecorpus {

TermCounts tokenize_for_dedup(std::string_view source_text) {
  const py::LexResult lexed = py::lex(source_text);
  TermCounts counts;
  for (const py::Token& tok : lexed.tokens) {
    if (tok.kind == py::TokenKind::Name) ++counts[tok.text];
  }
  return counts;
}

std::vector<DocumentVector> build_tfidf(
    const std::vector<std::pair<std::string, TermCounts>>& corpus) {
  const double n_docs = static_cast<double>(corpus.size());
  std::map<std::string, long long> df;
  for (const auto& [path, counts] : corpus) {
    for (const auto& [term, count] : counts) ++df[term];
  }

  std::vector<DocumentVector> vectors;
  vectors.reserve(corpus.size());
  for (const auto& [path, counts] : corpus) {
    DocumentVector vec;
    vec.file_path = path;
    double sum_squares = 0.0;
    for (const auto& [term, count] : counts) {
      const double idf =
          std::log((1.0 + n_docs) / (1.0 + static_cast<double>(df[term]))) + 1.0;
      const double weight = static_cast<double>(count) * idf;
      vec.weights.emplace(term, weight);
      sum_squares += weight * weight;
    }
    vec.norm = std::sqrt(sum_squares);
    vectors.push_back(std::move(vec));
  }
  return vectors;
}

double cosine_similarity(const DocumentVector& a, const DocumentVector& b) {
  if (a.norm <= 0.0 || b.norm <= 0.0) return 0.0;
  if (a.weights == b.weights) return 1.0;
  const auto& small = a.weights.size() <= b.weights.size() ? a : b;
  const auto& large = a.weights.size() <= b.weights.size() ? b : a;
  double dot = 0.0;
  for (const auto& [term, weight] : small.weights) {
    auto it = large.weights.find(term);
    if (it != large.weights.end()) dot += weight * it->second;
  }
  return std::clamp(dot / (a.norm * b.norm), 0.0, 1.0);
}

std::set<CandidatePair> knn_candidates(const std::vector<DocumentVector>& vectors,
                                       std::size_t k, double threshold) {
  std::set<CandidatePair> pairs;
  if (k == 0) return pairs;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const DocumentVector& query = vectors[i];
    if (query.norm <= 0.0) continue;
    // (similarity, path, index) for every other non-zero vector.
    std::vector<std::tuple<double, const std::string*, std::size_t>> scored;
    scored.reserve(vectors.size());
    for (std::size_t j = 0; j < vectors.size(); ++j) {
      if (j == i || vectors[j].norm <= 0.0) continue;
      scored.emplace_back(cosine_similarity(query, vectors[j]),
                          &vectors[j].file_path, j);
    }
    const std::size_t take = std::min(k, scored.size());
    std::partial_sort(scored.begin(), scored.begin() + take, scored.end(),
                      [](const auto& lhs, const auto& rhs) {
                        if (std::get<0>(lhs) != std::get<0>(rhs)) {
                          return std::get<0>(lhs) > std::get<0>(rhs);
                        }
                        return *std::get<1>(lhs) < *std::get<1>(rhs);
                      });
    for (std::size_t n = 0; n < take; ++n) {
      const auto& [similarity, path, j] = scored[n];
      if (similarity < threshold) break;  // sorted descending
      pairs.insert(query.file_path < *path
                       ? CandidatePair{query.file_path, *path}
                       : CandidatePair{*path, query.file_path});
    }
  }
  return pairs;
}

std::vector<DuplicateCluster> form_clusters(const std::set<CandidatePair>& pairs) {
  std::map<std::string, std::string> parent;
  auto find_root = [&parent](std::string node) {
    while (parent[node] != node) {
      parent[node] = parent[parent[node]];
      node = parent[node];
    }
    return node;
  };
  for (const auto& [a, b] : pairs) {
    parent.try_emplace(a, a);
    parent.try_emplace(b, b);
    const std::string root_a = find_root(a);
    const std::string root_b = find_root(b);
    if (root_a != root_b) {
      // Smaller root wins so the representative is order-independent.
      if (root_a < root_b) {
        parent[root_b] = root_a;
      } else {
        parent[root_a] = root_b;
      }
    }
  }

  std::map<std::string, std::vector<std::string>> components;
  for (const auto& [node, ignored] : parent) {
    components[find_root(node)].push_back(node);
  }

  std::vector<DuplicateCluster> clusters;
  clusters.reserve(components.size());
  for (auto& [root, members] : components) {
    if (members.size() < 2) continue;
    std::sort(members.begin(), members.end());
    DuplicateCluster cluster;
    cluster.representative = members.front();
    cluster.members = std::move(members);
    clusters.push_back(std::move(cluster));
  }
  std::sort(clusters.begin(), clusters.end(),
            [](const DuplicateCluster& a, const DuplicateCluster& b) {
              return a.representative < b.representative;
            });
  return clusters;
}

double duplication_ratio(std::size_t duplicate_files, std::size_t clusters,
                         std::size_t total_files) {
  if (duplicate_files < clusters) {
    throw DomainError("duplicate file count below cluster count");
  }
  if (total_files == 0) return 0.0;
  return 100.0 * static_cast<double>(duplicate_files - clusters) /
         static_cast<double>(total_files);
}

DedupReport make_dedup_report(std::size_t total_files,
                              const std::vector<DuplicateCluster>& clusters) {
  DedupReport report;
  report.total_files = total_files;
  report.clusters = clusters.size();
  std::vector<std::size_t> sizes;
  sizes.reserve(clusters.size());
  for (const DuplicateCluster& cluster : clusters) {
    report.duplicate_files += cluster.members.size();
    sizes.push_back(cluster.members.size());
  }
  report.removed_files = report.duplicate_files - report.clusters;
  if (!clusters.empty()) {
    report.avg_files_per_cluster = static_cast<double>(report.duplicate_files) /
                                   static_cast<double>(report.clusters);
    std::sort(sizes.begin(), sizes.end());
    const std::size_t mid = sizes.size() / 2;
    report.median_files_per_cluster =
        sizes.size() % 2 == 1
            ? static_cast<double>(sizes[mid])
            : (static_cast<double>(sizes[mid - 1]) +
               static_cast<double>(sizes[mid])) /
                  2.0;
  }
  report.duplication_ratio_pct =
      duplication_ratio(report.duplicate_files, report.clusters, total_files);
  return report;
}

DedupResult detect_duplicates(
    const std::vector<std::pair<std::string, TermCounts>>& corpus,
    std::size_t k, double threshold) {
  const std::vector<DocumentVector> vectors = build_tfidf(corpus);
  const std::set<CandidatePair> pairs = knn_candidates(vectors, k, threshold);
  DedupResult result;
  result.clusters = form_clusters(pairs);
  result.report = make_dedup_report(corpus.size(), result.clusters);
  return result;
}

}  // namespace typecorpus
