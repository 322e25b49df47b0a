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

#ifndef TYPECORPUS_DISCOVER_HPP_
#define TYPECORPUS_DISCOVER_HPP_

#include <filesystem>
#include <string>
#include <vector>

namespace typecorpus {

struct SourceFileEntry {
  std::string project;        // "author/repo", may be empty for bare trees
  std::string relative_path;  // forward-slash path below the root
  std::filesystem::path absolute_path;
};

// All and only ".py" files under root, recursively, sorted by relative_path.
// Hidden directories (leading ".") are skipped; symlinked directories are not
// followed. Throws IoError when root does not exist.
std::vector<SourceFileEntry> discover_source_files(
    const std::filesystem::path& root, const std::string& project = "");

}  // namespace typecorpus

#endif  // TYPECORPUS_DISCOVER_HPP_
