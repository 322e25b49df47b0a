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

#include "typecorpus/fetch.hpp"

#include "typecorpus/errors.hpp"
#include "typecorpus/subprocess.hpp"

namespace typecorpus {
namespace fs = std::filesystem;

namespace {

std::string trim(std::string text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                           text.back() == ' ')) {
    text.pop_back();
  }
  return text;
}

std::string head_commit(const fs::path& tree) {
  auto result = run_command({"git", "-C", tree.string(), "rev-parse", "HEAD"});
  return result.ok() ? trim(result.out) : "";
}

}  // namespace

fs::path fetch_project(const ManifestEntry& entry, const fs::path& dest_root) {
  const fs::path tree = dest_root / entry.author / entry.repo;

  if (fs::exists(tree / ".git")) {
    if (head_commit(tree) == entry.commit_hash) {
      return tree;  // already pinned
    }
  } else {
    fs::create_directories(tree.parent_path());
    auto clone = run_command(
        {"git", "clone", "--quiet", entry.url, tree.string()});
    if (!clone.ok()) {
      throw FetchError(FetchError::Kind::FetchFailed,
                       "clone failed for " + entry.url + ": " + trim(clone.err));
    }
  }

  auto checkout = run_command({"git", "-C", tree.string(), "checkout",
                               "--quiet", "--detach", entry.commit_hash});
  if (!checkout.ok()) {
    throw FetchError(FetchError::Kind::CommitNotFound,
                     "commit " + entry.commit_hash + " not found in " +
                         entry.url + ": " + trim(checkout.err));
  }
  return tree;
}

}  // namespace typecorpus
