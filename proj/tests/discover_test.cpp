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

#include <filesystem>
#include <string>
#include <vector>

#include <doctest.h>

#include "support/temp_dir.hpp"
#include "typecorpus/source_text.hpp"

namespace typecorpus {
namespace {

namespace fs = std::filesystem;
using testing::TempDir;

void touch(const fs::path& path, const std::string& content = "x = 1\n") {
  fs::create_directories(path.parent_path());
  write_file_bytes(path, content);
}

std::vector<std::string> relative_paths(
    const std::vector<SourceFileEntry>& entries) {
  std::vector<std::string> out;
  for (const auto& entry : entries) out.push_back(entry.relative_path);
  return out;
}

TEST_CASE("discover_source_files finds .py files recursively, sorted") {
  TempDir dir;
  touch(dir / "zeta.py");
  touch(dir / "pkg" / "alpha.py");
  touch(dir / "pkg" / "sub" / "beta.py");
  touch(dir / "README.md", "# not python\n");
  touch(dir / "pkg" / "notes.txt", "text\n");

  const auto entries = discover_source_files(dir.path(), "a/r");
  CHECK(relative_paths(entries) ==
        std::vector<std::string>{"pkg/alpha.py", "pkg/sub/beta.py", "zeta.py"});
  for (const auto& entry : entries) {
    CHECK(entry.project == "a/r");
    CHECK(fs::exists(entry.absolute_path));
  }
}

TEST_CASE("discover_source_files skips hidden directories only") {
  TempDir dir;
  touch(dir / "kept.py");
  touch(dir / ".git" / "hooks" / "sample.py");
  touch(dir / ".tox" / "env.py");
  // A dot-file is unusual but still a source file; only dot-directories
  // (version-control metadata) are pruned.
  touch(dir / ".hidden.py");

  const auto entries = discover_source_files(dir.path());
  CHECK(relative_paths(entries) ==
        std::vector<std::string>{".hidden.py", "kept.py"});
}

TEST_CASE("discover_source_files requires the .py suffix exactly") {
  TempDir dir;
  touch(dir / "mod.py");
  touch(dir / "mod.pyc", "\x03");
  touch(dir / "mod.pyi", "x: int\n");
  touch(dir / "py", "not a suffix\n");

  const auto entries = discover_source_files(dir.path());
  CHECK(relative_paths(entries) == std::vector<std::string>{"mod.py"});
}

TEST_CASE("discover_source_files returns empty for an empty tree") {
  TempDir dir;
  CHECK(discover_source_files(dir.path()).empty());
}

TEST_CASE("discover_source_files does not follow directory symlinks") {
  TempDir dir;
  touch(dir / "real" / "a.py");
  std::error_code ec;
  fs::create_directory_symlink(dir / "real", dir / "loop", ec);
  if (ec) return;  // filesystem without symlink support; nothing to assert

  const auto entries = discover_source_files(dir.path());
  CHECK(relative_paths(entries) == std::vector<std::string>{"real/a.py"});
}

TEST_CASE("discover_source_files uses forward slashes in relative paths") {
  TempDir dir;
  touch(dir / "a" / "b" / "c.py");
  const auto entries = discover_source_files(dir.path());
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].relative_path == "a/b/c.py");
  CHECK(entries[0].relative_path.find('\\') == std::string::npos);
}

}  // namespace
}  // namespace typecorpus
