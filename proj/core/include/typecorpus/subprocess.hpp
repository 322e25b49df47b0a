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

#ifndef TYPECORPUS_SUBPROCESS_HPP_
#define TYPECORPUS_SUBPROCESS_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace typecorpus {

struct CommandResult {
  int exit_code = -1;
  std::string out;
  std::string err;

  bool ok() const { return exit_code == 0; }
};

// Runs argv[0] with the given arguments, no shell involved. Captures both
// output streams. Throws IoError if the process cannot be spawned at all.
CommandResult run_command(const std::vector<std::string>& argv,
                          const std::optional<std::filesystem::path>& cwd = {});

}  // namespace typecorpus

#endif  // TYPECORPUS_SUBPROCESS_HPP_
