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

#ifndef TYPECORPUS_EMIT_HPP_
#define TYPECORPUS_EMIT_HPP_

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "typecorpus/records.hpp"

namespace typecorpus {

// JSON views of the record types. Key order is part of the contract:
//   module:   untyped_seq, typed_seq, imports, variables, classes, funcs, set
//   class:    name, variables, funcs
//   function: name, params, ret_exprs, ret_type, variables, params_occur,
//             docstring {func, ret, long_descr}
// Empty values serialize as "" / [] / {}, never null.
nlohmann::ordered_json function_to_json(const FunctionRecord& record);
nlohmann::ordered_json module_to_json(const ModuleRecord& record);
nlohmann::ordered_json project_to_json(const ProjectRecord& record);

// Byte-deterministic serialization of one project, keyed "author/repo".
// Throws IncompleteRecord when a module still lacks a split label.
std::string emit_project_json(const ProjectRecord& record);

// Inverse of emit_project_json, used for round-trips and the stats stage.
ProjectRecord parse_project_json(const std::string& text);

// "author$repo.json" — one output file per project.
std::string project_file_name(const ProjectRecord& record);

// Assembles the four-part dataset archive: processed_projects/*.json, the
// manifest, the duplicate-clusters file, and the split CSV. Throws
// MissingInput naming the absent piece.
void write_bundle(const std::filesystem::path& processed_dir,
                  const std::filesystem::path& manifest_path,
                  const std::filesystem::path& duplicates_path,
                  const std::filesystem::path& split_csv_path,
                  const std::filesystem::path& out_path);

}  // namespace typecorpus

#endif  // TYPECORPUS_EMIT_HPP_
