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

#include "typecorpus/manifest.hpp"

#include <fstream>
#include <sstream>

#include "typecorpus/errors.hpp"

namespace typecorpus {
namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string field;
  while (in >> field) fields.push_back(field);
  return fields;
}

// Last two path segments of the URL name the project, e.g.
// "https://github.com/numpy/numpy.git" -> ("numpy", "numpy").
bool parse_author_repo(const std::string& url, std::string& author,
                       std::string& repo) {
  std::string path = url;
  while (!path.empty() && path.back() == '/') path.pop_back();
  if (path.size() > 4 && path.ends_with(".git")) {
    path.resize(path.size() - 4);
  }
  auto last = path.rfind('/');
  if (last == std::string::npos || last == 0) return false;
  auto prev = path.rfind('/', last - 1);
  repo = path.substr(last + 1);
  author = prev == std::string::npos ? path.substr(0, last)
                                     : path.substr(prev + 1, last - prev - 1);
  // Strip a "user@host:" prefix from scp-style URLs.
  auto colon = author.rfind(':');
  if (colon != std::string::npos) author = author.substr(colon + 1);
  return !author.empty() && !repo.empty();
}

}  // namespace

bool is_commit_hash(const std::string& text) {
  if (text.size() != 40) return false;
  for (char c : text) {
    bool hex = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
    if (!hex) return false;
  }
  return true;
}

std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ManifestError("manifest file not found: " + path.string());
  }

  std::vector<ManifestEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto fields = split_ws(line);
    if (fields.empty()) continue;  // blank line
    if (fields.size() != 2) {
      throw ManifestError("line " + std::to_string(line_no) +
                              ": expected \"URL <commit-hash>\"",
                          line_no);
    }
    ManifestEntry entry;
    entry.url = fields[0];
    entry.commit_hash = fields[1];
    if (!is_commit_hash(entry.commit_hash)) {
      throw ManifestError("line " + std::to_string(line_no) +
                              ": commit hash must be 40 lowercase hex chars",
                          line_no);
    }
    if (!parse_author_repo(entry.url, entry.author, entry.repo)) {
      throw ManifestError("line " + std::to_string(line_no) +
                              ": cannot derive author/repo from URL \"" +
                              entry.url + "\"",
                          line_no);
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace typecorpus
