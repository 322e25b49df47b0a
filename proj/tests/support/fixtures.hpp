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

#ifndef TYPECORPUS_TESTS_SUPPORT_FIXTURES_HPP_
#define TYPECORPUS_TESTS_SUPPORT_FIXTURES_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace typecorpus::testing {

// Deterministic splitmix64 stream; identical on every platform, unlike the
// standard distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  std::uint32_t pick(std::uint32_t bound);  // uniform in [0, bound)
  bool chance(std::uint32_t percent);

 private:
  std::uint64_t state_;
};

// --- synthetic Python corpus -------------------------------------------------

// A self-contained Python-3 module whose shape varies with `index`:
// imports, annotated and bare assignments, classes, free/async/decorated
// functions, all three docstring styles, comprehensions, lambdas, nesting.
// Every generated module parses under a standard Python 3 grammar.
std::string fixture_module_source(std::uint64_t index);

// A module using Python-2-only statement syntax (fails a Python-3 parse).
std::string python2_module_source(std::uint64_t index);

struct FixtureFile {
  std::string relative_path;
  std::string content;
};

// `count` modules named pkg/mod_<i>.py plus a handful of exact duplicates
// when `with_duplicates` is set.
std::vector<FixtureFile> fixture_tree(std::uint64_t seed, int count,
                                      bool with_duplicates);

// --- git-backed project fixtures ---------------------------------------------

// Initializes a repository at `dir` containing `files`, commits everything,
// and returns the commit hash.
std::string make_git_repo(const std::filesystem::path& dir,
                          const std::vector<FixtureFile>& files);

// Appends "URL SPACE hash" manifest lines for local repository paths.
void append_manifest_line(std::string& manifest, const std::filesystem::path& repo_dir,
                          const std::string& commit);

// --- hand-countable statistics fixture ----------------------------------------

// The statistics oracle is model-driven: the same small declarative tables
// below produce both the Python sources (render_oracle_module) and the
// expected counters (computed with plain arithmetic in the test). The
// counting path shares no code with the lexer, parser, or extractor.

struct OracleParam {
  std::string name;
  std::string type;  // "" = unannotated
  bool documented = false;
};

struct OracleFunction {
  std::string name;
  bool method = false;  // rendered with a leading self parameter
  std::vector<OracleParam> params;
  std::string ret_type;  // "" = none
  int doc_format = 0;    // 0 none, 1 Google, 2 reST, 3 NumPy
  std::vector<std::pair<std::string, std::string>> variables;
  int return_count = 1;
};

struct OracleClass {
  std::string name;
  std::vector<std::pair<std::string, std::string>> variables;
  std::vector<OracleFunction> methods;
};

struct OracleModule {
  std::string relative_path;
  std::vector<std::string> imports;
  std::vector<std::pair<std::string, std::string>> variables;
  std::vector<OracleFunction> funcs;
  std::vector<OracleClass> classes;
};

struct OracleProject {
  std::string author;
  std::string repo;
  std::vector<OracleModule> modules;
};

std::vector<OracleProject> stats_oracle_projects();
std::string render_oracle_module(const OracleModule& module);

// Line-based source-lines count used as the independent oracle: a line
// counts when it is inside a triple-quoted string or carries content that
// is not a comment. Valid for the regular shapes this suite generates.
int oracle_sloc(const std::string& text);

// --- schema checking -----------------------------------------------------------

// Validates one emitted project document against the 23-field schema
// (exact key sets, exact key order, value kinds). Returns "" when valid,
// else a description of the first violation.
std::string check_project_json_schema(const nlohmann::ordered_json& doc);

}  // namespace typecorpus::testing

#endif  // TYPECORPUS_TESTS_SUPPORT_FIXTURES_HPP_
