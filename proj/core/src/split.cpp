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

#include "typecorpus/split.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "typecorpus/errors.hpp"
#include "typecorpus/source_text.hpp"

namespace typecorpus {

SplitAssignment assign_splits(std::vector<std::string> files,
                              const std::array<double, 3>& ratios,
                              std::uint64_t seed) {
  if (files.empty()) throw SplitError("no files to assign");
  const double sum = ratios[0] + ratios[1] + ratios[2];
  if (std::abs(sum - 1.0) > 1e-9) {
    throw SplitError("split ratios must sum to 1");
  }
  for (double ratio : ratios) {
    if (ratio < 0.0) throw SplitError("split ratios must be non-negative");
  }

  std::sort(files.begin(), files.end());

  // Fisher-Yates with explicit modulo indexing: std::shuffle's distribution
  // mapping is implementation-defined, and assignments must be reproducible
  // across standard libraries.
  std::mt19937_64 rng(seed);
  for (std::size_t i = files.size() - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
    std::swap(files[i], files[j]);
  }

  const std::size_t total = files.size();
  const auto valid_count = static_cast<std::size_t>(
      std::floor(ratios[1] * static_cast<double>(total)));
  const auto test_count = static_cast<std::size_t>(
      std::floor(ratios[2] * static_cast<double>(total)));
  const std::size_t train_count = total - valid_count - test_count;

  SplitAssignment assignment;
  assignment.seed = seed;
  assignment.ratios = ratios;
  assignment.entries.reserve(total);
  for (std::size_t i = 0; i < total; ++i) {
    SetLabel label = SetLabel::Train;
    if (i >= train_count + valid_count) {
      label = SetLabel::Test;
    } else if (i >= train_count) {
      label = SetLabel::Valid;
    }
    assignment.entries.emplace_back(std::move(files[i]), label);
  }
  std::sort(assignment.entries.begin(), assignment.entries.end());
  return assignment;
}

std::string render_split_csv(const SplitAssignment& assignment) {
  std::string out = "file,set\n";
  for (const auto& [file, label] : assignment.entries) {
    if (file.find(',') != std::string::npos) {
      throw SplitError("file path contains a comma: " + file);
    }
    out += file;
    out += ',';
    out += to_string(label);
    out += '\n';
  }
  return out;
}

void write_split_csv(const SplitAssignment& assignment,
                     const std::filesystem::path& path) {
  write_file_bytes(path, render_split_csv(assignment));
}

SplitAssignment read_split_csv(const std::filesystem::path& path) {
  const std::string text = read_file_bytes(path);
  SplitAssignment assignment;
  std::istringstream stream(text);
  std::string line;
  bool first = true;
  std::size_t line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (first) {
      first = false;
      if (line != "file,set") {
        throw SplitError("split CSV missing 'file,set' header");
      }
      continue;
    }
    if (line.empty()) continue;
    const auto comma = line.rfind(',');
    if (comma == std::string::npos) {
      throw SplitError("split CSV row " + std::to_string(line_no) +
                       " has no separator");
    }
    const std::string file = line.substr(0, comma);
    const std::string label_text = line.substr(comma + 1);
    const SetLabel label = set_label_from_string(label_text);
    if (label == SetLabel::Unassigned) {
      throw SplitError("split CSV row " + std::to_string(line_no) +
                       " has unknown label '" + label_text + "'");
    }
    assignment.entries.emplace_back(file, label);
  }
  std::sort(assignment.entries.begin(), assignment.entries.end());
  return assignment;
}

}  // namespace typecorpus
