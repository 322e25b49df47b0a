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

#include "typecorpus/discover.hpp"

#include <algorithm>

#include "typecorpus/errors.hpp"

namespace typecorpus {
namespace fs = std::filesystem;

namespace {

void walk(const fs::path& dir, const fs::path& root, const std::string& project,
          std::vector<SourceFileEntry>& out) {
  std::vector<fs::directory_entry> entries;
  for (const auto& entry : fs::directory_iterator(dir)) {
    entries.push_back(entry);
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.path() < b.path(); });

  for (const auto& entry : entries) {
    const std::string name = entry.path().filename().string();
    std::error_code ec;
    if (entry.is_directory(ec)) {
      if (name.starts_with(".")) continue;      // VCS metadata and friends
      if (entry.is_symlink(ec)) continue;       // do not follow, avoids cycles
      walk(entry.path(), root, project, out);
    } else if (entry.is_regular_file(ec) || entry.is_symlink(ec)) {
      if (entry.path().extension() != ".py") continue;
      SourceFileEntry file;
      file.project = project;
      file.relative_path = entry.path().lexically_relative(root).generic_string();
      file.absolute_path = entry.path();
      out.push_back(std::move(file));
    }
  }
}

}  // namespace

std::vector<SourceFileEntry> discover_source_files(const fs::path& root,
                                                   const std::string& project) {
  if (!fs::exists(root) || !fs::is_directory(root)) {
    throw IoError("source tree not found: " + root.string());
  }
  std::vector<SourceFileEntry> out;
  walk(root, root, project, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.relative_path < b.relative_path;
  });
  return out;
}

}  // namespace typecorpus
