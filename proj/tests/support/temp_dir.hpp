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

#ifndef TYPECORPUS_TESTS_SUPPORT_TEMP_DIR_HPP_
#define TYPECORPUS_TESTS_SUPPORT_TEMP_DIR_HPP_

#include <filesystem>
#include <string>

namespace typecorpus::testing {

// Unique scratch directory, removed recursively on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();

  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const {
    return path_ / name;
  }

 private:
  std::filesystem::path path_;
};

// Writes UTF-8 text, creating parent directories as needed.
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace typecorpus::testing

#endif  // TYPECORPUS_TESTS_SUPPORT_TEMP_DIR_HPP_
