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

#ifndef TYPECORPUS_SPLIT_HPP_
#define TYPECORPUS_SPLIT_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "typecorpus/records.hpp"

namespace typecorpus {

struct SplitAssignment {
  // file path -> label, kept sorted by file path.
  std::vector<std::pair<std::string, SetLabel>> entries;
  std::uint64_t seed = 0;
  std::array<double, 3> ratios{0.7, 0.1, 0.2};  // train, valid, test
};

// Seeded uniform shuffle of the sorted file list, then a contiguous cut:
// floor(ratio*N) files for valid and test, remainder to train.
// Throws SplitError when the ratios do not sum to 1 within 1e-9 or a ratio
// is negative, and when `files` is empty.
SplitAssignment assign_splits(std::vector<std::string> files,
                              const std::array<double, 3>& ratios,
                              std::uint64_t seed);

// Renders "file,set" rows sorted by file path, LF line endings. Paths
// containing a comma are rejected with SplitError.
std::string render_split_csv(const SplitAssignment& assignment);

void write_split_csv(const SplitAssignment& assignment,
                     const std::filesystem::path& path);

// Parses the CSV format written above (used for round-trips and the
// processing stage's label lookup).
SplitAssignment read_split_csv(const std::filesystem::path& path);

}  // namespace typecorpus

#endif  // TYPECORPUS_SPLIT_HPP_
