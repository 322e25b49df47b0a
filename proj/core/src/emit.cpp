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

#include "typecorpus/emit.hpp"

#include <algorithm>
#include <vector>

#include "typecorpus/errors.hpp"
#include "typecorpus/source_text.hpp"
#include "typecorpus/zipfile.hpp"

namespace typecorpus {
namespace {

using nlohmann::ordered_json;

ordered_json map_to_json(const OrderedMap& map) {
  ordered_json out = ordered_json::object();
  for (const auto& [key, value] : map) out[key] = value;
  return out;
}

OrderedMap map_from_json(const ordered_json& object) {
  OrderedMap out;
  for (const auto& [key, value] : object.items()) {
    out.append(key, value.get<std::string>());
  }
  return out;
}

std::string dump(const ordered_json& value) {
  return value.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

FunctionRecord function_from_json(const ordered_json& object) {
  FunctionRecord record;
  record.name = object.at("name").get<std::string>();
  record.params = map_from_json(object.at("params"));
  for (const auto& expr : object.at("ret_exprs")) {
    record.ret_exprs.push_back(expr.get<std::string>());
  }
  record.ret_type = object.at("ret_type").get<std::string>();
  record.variables = map_from_json(object.at("variables"));
  for (const auto& [param, windows] : object.at("params_occur").items()) {
    std::vector<OccurrenceWindow> occurrences;
    for (const auto& window : windows) {
      OccurrenceWindow tokens;
      for (const auto& tok : window) tokens.push_back(tok.get<std::string>());
      occurrences.push_back(std::move(tokens));
    }
    record.params_occur.emplace_back(param, std::move(occurrences));
  }
  const ordered_json& doc = object.at("docstring");
  record.docstring.func = doc.at("func").get<std::string>();
  record.docstring.ret = doc.at("ret").get<std::string>();
  record.docstring.long_descr = doc.at("long_descr").get<std::string>();
  return record;
}

ModuleRecord module_from_json(const std::string& file_path,
                              const ordered_json& object) {
  ModuleRecord record;
  record.file_path = file_path;
  record.untyped_seq = object.at("untyped_seq").get<std::string>();
  record.typed_seq = object.at("typed_seq").get<std::string>();
  for (const auto& name : object.at("imports")) {
    record.imports.push_back(name.get<std::string>());
  }
  record.variables = map_from_json(object.at("variables"));
  for (const auto& cls : object.at("classes")) {
    ClassRecord class_record;
    class_record.name = cls.at("name").get<std::string>();
    class_record.variables = map_from_json(cls.at("variables"));
    for (const auto& func : cls.at("funcs")) {
      class_record.funcs.push_back(function_from_json(func));
    }
    record.classes.push_back(std::move(class_record));
  }
  for (const auto& func : object.at("funcs")) {
    record.funcs.push_back(function_from_json(func));
  }
  record.set_label = set_label_from_string(object.at("set").get<std::string>());
  return record;
}

}  // namespace

ordered_json function_to_json(const FunctionRecord& record) {
  ordered_json out = ordered_json::object();
  out["name"] = record.name;
  out["params"] = map_to_json(record.params);
  out["ret_exprs"] = record.ret_exprs;
  out["ret_type"] = record.ret_type;
  out["variables"] = map_to_json(record.variables);
  ordered_json occur = ordered_json::object();
  for (const auto& [param, windows] : record.params_occur) {
    occur[param] = windows;
  }
  out["params_occur"] = std::move(occur);
  out["docstring"] = {{"func", record.docstring.func},
                      {"ret", record.docstring.ret},
                      {"long_descr", record.docstring.long_descr}};
  return out;
}

ordered_json module_to_json(const ModuleRecord& record) {
  ordered_json out = ordered_json::object();
  out["untyped_seq"] = record.untyped_seq;
  out["typed_seq"] = record.typed_seq;
  out["imports"] = record.imports;
  out["variables"] = map_to_json(record.variables);
  ordered_json classes = ordered_json::array();
  for (const ClassRecord& cls : record.classes) {
    ordered_json entry = ordered_json::object();
    entry["name"] = cls.name;
    entry["variables"] = map_to_json(cls.variables);
    ordered_json funcs = ordered_json::array();
    for (const FunctionRecord& func : cls.funcs) {
      funcs.push_back(function_to_json(func));
    }
    entry["funcs"] = std::move(funcs);
    classes.push_back(std::move(entry));
  }
  out["classes"] = std::move(classes);
  ordered_json funcs = ordered_json::array();
  for (const FunctionRecord& func : record.funcs) {
    funcs.push_back(function_to_json(func));
  }
  out["funcs"] = std::move(funcs);
  out["set"] = to_string(record.set_label);
  return out;
}

ordered_json project_to_json(const ProjectRecord& record) {
  ordered_json files = ordered_json::object();
  for (const auto& [path, module] : record.src_files) {
    if (module.set_label == SetLabel::Unassigned) {
      throw IncompleteRecord("module has no split label: " +
                             record.qualified_name() + "/" + path);
    }
    files[path] = module_to_json(module);
  }
  ordered_json out = ordered_json::object();
  out[record.qualified_name()] = std::move(files);
  return out;
}

std::string emit_project_json(const ProjectRecord& record) {
  return dump(project_to_json(record));
}

ProjectRecord parse_project_json(const std::string& text) {
  const ordered_json parsed = ordered_json::parse(text);
  if (!parsed.is_object() || parsed.size() != 1) {
    throw EmitError("project JSON must hold exactly one author/repo key");
  }
  ProjectRecord record;
  const auto& item = parsed.items().begin();
  const std::string qualified = item.key();
  const auto slash = qualified.find('/');
  if (slash == std::string::npos) {
    throw EmitError("project key is not author/repo: " + qualified);
  }
  record.author = qualified.substr(0, slash);
  record.repo = qualified.substr(slash + 1);
  for (const auto& [path, module] : item.value().items()) {
    record.src_files.emplace(path, module_from_json(path, module));
  }
  return record;
}

std::string project_file_name(const ProjectRecord& record) {
  return record.author + "$" + record.repo + ".json";
}

void write_bundle(const std::filesystem::path& processed_dir,
                  const std::filesystem::path& manifest_path,
                  const std::filesystem::path& duplicates_path,
                  const std::filesystem::path& split_csv_path,
                  const std::filesystem::path& out_path) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(processed_dir)) throw MissingInput("processed_projects");
  if (!fs::is_regular_file(manifest_path)) throw MissingInput("manifest");
  if (!fs::is_regular_file(duplicates_path)) throw MissingInput("duplicates");
  if (!fs::is_regular_file(split_csv_path)) throw MissingInput("split");

  std::vector<ZipEntry> entries;
  std::vector<fs::path> project_files;
  for (const auto& item : fs::directory_iterator(processed_dir)) {
    if (item.is_regular_file() && item.path().extension() == ".json") {
      project_files.push_back(item.path());
    }
  }
  std::sort(project_files.begin(), project_files.end());
  for (const fs::path& file : project_files) {
    entries.push_back({"processed_projects/" + file.filename().string(),
                       read_file_bytes(file)});
  }
  entries.push_back({"manifest.txt", read_file_bytes(manifest_path)});
  entries.push_back({"duplicates.jsonl", read_file_bytes(duplicates_path)});
  entries.push_back({"split.csv", read_file_bytes(split_csv_path)});
  write_zip(out_path, std::move(entries));
}

}  // namespace typecorpus
