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

#ifndef TYPECORPUS_MANIFEST_HPP_
#define TYPECORPUS_MANIFEST_HPP_

#include <filesystem>
#include <string>
#include <vector>

namespace typecorpus {

struct ManifestEntry {
  std::string author;
  std::string repo;
  std::string url;
  std::string commit_hash;  // 40 lowercase hex characters

  std::string qualified_name() const { return author + "/" + repo; }
};

// Manifest file format: one project per line, "URL <40-hex-commit>".
// Blank lines are skipped; order is preserved. Author and repo come from the
// last two path segments of the URL (a trailing ".git" is dropped).
// Throws ManifestError with the offending 1-based line number.
std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path);

// Exposed for reuse by the loader tests.
bool is_commit_hash(const std::string& text);

}  // namespace typecorpus

#endif  // TYPECORPUS_MANIFEST_HPP_
