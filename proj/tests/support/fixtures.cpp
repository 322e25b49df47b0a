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

#include "support/fixtures.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <stdexcept>

#include "support/temp_dir.hpp"
#include "typecorpus/subprocess.hpp"

namespace typecorpus::testing {

std::uint64_t Rng::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint32_t Rng::pick(std::uint32_t bound) {
  return bound == 0 ? 0 : static_cast<std::uint32_t>(next() % bound);
}

bool Rng::chance(std::uint32_t percent) { return pick(100) < percent; }

namespace {

const std::vector<std::string> kWords = {
    "user",  "item",   "record", "path",  "value", "token",  "node",
    "buffer", "index",  "name",   "config", "result", "entry", "line",
    "text",  "field",  "batch",  "queue",  "cache", "label"};

const std::vector<std::string> kTypes = {
    "int",         "str",
    "bool",        "float",
    "List[int]",   "List[str]",
    "Dict[str, int]", "Optional[str]",
    "Any",         "Tuple[int, int]"};

std::string cap(std::string word) {
  if (!word.empty()) word[0] = static_cast<char>(std::toupper(word[0]));
  return word;
}

void emit(std::string& out, int indent, const std::string& line) {
  if (line.empty()) {
    out += '\n';
    return;
  }
  out.append(static_cast<std::size_t>(indent) * 4, ' ');
  out += line;
  out += '\n';
}

struct BodyLine {
  int rel;  // indent relative to the function body
  std::string text;
};

// One statement group that exercises the given parameter names.
std::vector<BodyLine> body_template(Rng& rng, const std::string& p0,
                                    const std::string& p1) {
  switch (rng.pick(12)) {
    case 0:
      return {{0, "filtered = [x for x in " + p0 + " if x]"},
              {0, "return filtered"}};
    case 1:
      return {{0, "total = 0"},
              {0, "for element in " + p0 + ":"},
              {1, "total += 1"},
              {0, "return total"}};
    case 2:
      return {{0, "if not " + p0 + ":"},
              {1, "raise ValueError(\"empty input\")"},
              {0, "return len(" + p0 + ")"}};
    case 3:
      return {{0, "try:"},
              {1, "parsed = int(" + p0 + ")"},
              {0, "except (TypeError, ValueError):"},
              {1, "parsed = 0"},
              {0, "return parsed"}};
    case 4:
      return {{0, "mapping = {key: str(key) for key in range(" + p1 + ")}"},
              {0, "return mapping"}};
    case 5:
      return {{0, "collected = []"},
              {0, "while len(collected) < " + p1 + ":"},
              {1, "collected.append(len(collected) * 2)"},
              {0, "return collected"}};
    case 6:
      return {{0, "keep = lambda v: v is not None"},
              {0, "return [v for v in " + p0 + " if keep(v)]"}};
    case 7:
      return {{0, "parts = str(" + p0 + ").split(\",\")"},
              {0, "return \", \".join(parts[:" + p1 + "])"}};
    case 8:
      return {{0, "def scale(v):"},
              {1, "return v * 2"},
              {0, "return scale(" + p1 + ")"}};
    case 9:
      return {{0, "message = f\"processed {" + p0 + "} entries\""},
              {0, "return message"}};
    case 10:
      return {{0, "assert " + p1 + " >= 0, \"negative bound\""},
              {0, "return " + p0 + "[:" + p1 + "]"}};
    default:
      return {{0, "table = {\"alpha\": 1, \"beta\": 2}"},
              {0, "return table.get(str(" + p0 + "), 0)"}};
  }
}

std::vector<BodyLine> docstring_template(Rng& rng, int format,
                                         const std::vector<std::string>& params) {
  std::vector<BodyLine> lines;
  const std::string topic = kWords[rng.pick(kWords.size())];
  if (format == 1) {  // Google
    lines.push_back({0, "\"\"\"Process the " + topic + " input."});
    lines.push_back({0, ""});
    if (!params.empty()) {
      lines.push_back({0, "Args:"});
      for (const auto& p : params) {
        lines.push_back({1, p + ": The " + p + " to use."});
      }
      lines.push_back({0, ""});
    }
    lines.push_back({0, "Returns:"});
    lines.push_back({1, "The processed value."});
    lines.push_back({0, "\"\"\""});
  } else if (format == 2) {  // reST
    lines.push_back({0, "\"\"\"Build the " + topic + " result."});
    lines.push_back({0, ""});
    for (const auto& p : params) {
      lines.push_back({0, ":param " + p + ": the " + p + " to use"});
    }
    lines.push_back({0, ":returns: the computed value"});
    lines.push_back({0, "\"\"\""});
  } else {  // NumPy
    lines.push_back({0, "\"\"\"Collect the " + topic + " output."});
    lines.push_back({0, ""});
    if (!params.empty()) {
      lines.push_back({0, "Parameters"});
      lines.push_back({0, "----------"});
      for (const auto& p : params) {
        lines.push_back({0, p + " : object"});
        lines.push_back({1, "The " + p + " to use."});
      }
      lines.push_back({0, ""});
    }
    lines.push_back({0, "Returns"});
    lines.push_back({0, "-------"});
    lines.push_back({0, "object"});
    lines.push_back({1, "The computed value."});
    lines.push_back({0, "\"\"\""});
  }
  return lines;
}

void gen_function(std::string& out, Rng& rng, int indent, bool method,
                  std::uint64_t index) {
  const bool is_async = !method && rng.chance(10);
  const bool decorated = rng.chance(15);
  if (decorated) {
    emit(out, indent, method ? "@staticmethod" : "@functools.lru_cache()");
  }
  const bool takes_self = method && !decorated;

  std::string fname = kWords[rng.pick(kWords.size())] + "_" +
                      kWords[rng.pick(kWords.size())] + "_" +
                      std::to_string(index % 97);
  std::vector<std::string> params;
  const std::uint32_t n_params = rng.pick(3) + (method ? 0 : 1);
  for (std::uint32_t p = 0; p < n_params; ++p) {
    params.push_back(kWords[rng.pick(kWords.size())] + std::to_string(p));
  }

  std::string sig;
  if (takes_self) sig = "self";
  for (const auto& p : params) {
    if (!sig.empty()) sig += ", ";
    sig += p;
    if (rng.chance(60)) sig += ": " + kTypes[rng.pick(kTypes.size())];
    if (rng.chance(25)) sig += " = None";
  }
  std::string head = std::string(is_async ? "async def " : "def ") + fname +
                     "(" + sig + ")";
  if (rng.chance(55)) head += " -> " + kTypes[rng.pick(kTypes.size())];
  head += ":";
  emit(out, indent, head);

  const int doc = rng.chance(70) ? static_cast<int>(rng.pick(3)) + 1 : 0;
  if (doc != 0) {
    for (const auto& line : docstring_template(rng, doc, params)) {
      emit(out, indent + 1 + line.rel, line.text);
    }
  }
  const std::string p0 = params.empty() ? "[1, 2, 3]" : params[0];
  const std::string p1 = params.size() > 1 ? params[1] : "3";
  if (rng.chance(25)) {
    std::string local = kWords[rng.pick(kWords.size())] + "_local";
    if (rng.chance(50)) {
      emit(out, indent + 1,
           local + ": " + kTypes[rng.pick(kTypes.size())] + " = " + p1);
    } else {
      emit(out, indent + 1, local + " = " + p1);
    }
  }
  for (const auto& line : body_template(rng, p0, p1)) {
    emit(out, indent + 1 + line.rel, line.text);
  }
}

void gen_class(std::string& out, Rng& rng, std::uint64_t index) {
  std::string cname = cap(kWords[rng.pick(kWords.size())]) +
                      cap(kWords[rng.pick(kWords.size())]);
  emit(out, 0, "class " + cname + ":");
  const bool has_doc = rng.chance(40);
  if (has_doc) {
    emit(out, 1, "\"\"\"Container for " + kWords[rng.pick(kWords.size())] +
                     " state.\"\"\"");
    emit(out, 0, "");
  }
  const std::uint32_t n_vars = rng.pick(3);
  for (std::uint32_t v = 0; v < n_vars; ++v) {
    std::string name = kWords[rng.pick(kWords.size())] + "_attr" +
                       std::to_string(v);
    if (rng.chance(50)) {
      emit(out, 1, name + ": " + kTypes[rng.pick(kTypes.size())] + " = " +
                       std::to_string(rng.pick(10)));
    } else {
      emit(out, 1, name + " = " + std::to_string(rng.pick(10)));
    }
  }
  if (rng.chance(60)) {
    emit(out, 1, "def __init__(self, seed: int = 0):");
    emit(out, 2, "self.seed = seed");
    emit(out, 2, "self.items = []");
    emit(out, 0, "");
  } else if (n_vars == 0 && !has_doc) {
    emit(out, 1, "pass");
  }
  const std::uint32_t n_methods = rng.pick(2) + 1;
  for (std::uint32_t m = 0; m < n_methods; ++m) {
    gen_function(out, rng, 1, true, index * 7 + m);
    emit(out, 0, "");
  }
}

}  // namespace

std::string fixture_module_source(std::uint64_t index) {
  Rng rng(index * 0x9e3779b97f4a7c15ULL + 17);
  std::string out;
  if (rng.chance(60)) {
    emit(out, 0, "\"\"\"Helpers for " + kWords[rng.pick(kWords.size())] +
                     " management.\"\"\"");
    emit(out, 0, "");
  }
  emit(out, 0, "import functools");
  emit(out, 0, "import os");
  if (rng.chance(50)) emit(out, 0, "import re as regex");
  if (rng.chance(30)) emit(out, 0, "from collections import OrderedDict");
  emit(out, 0, "from typing import Any, Dict, List, Optional, Tuple");
  emit(out, 0, "");
  const std::uint32_t n_mod_vars = rng.pick(3) + 1;
  for (std::uint32_t v = 0; v < n_mod_vars; ++v) {
    std::string name = kWords[rng.pick(kWords.size())];
    std::transform(name.begin(), name.end(), name.begin(), ::toupper);
    name += "_LIMIT" + std::to_string(v);
    if (rng.chance(50)) {
      emit(out, 0, name + ": int = " + std::to_string(rng.pick(100)));
    } else {
      emit(out, 0, name + " = " + std::to_string(rng.pick(100)));
    }
  }
  emit(out, 0, "_registry: Dict[str, Any] = {}");
  emit(out, 0, "");
  emit(out, 0, "");

  const std::uint32_t n_funcs = rng.pick(3) + 2;
  for (std::uint32_t f = 0; f < n_funcs; ++f) {
    gen_function(out, rng, 0, false, index * 13 + f);
    emit(out, 0, "");
    emit(out, 0, "");
  }
  const std::uint32_t n_classes = rng.pick(2) + (rng.chance(70) ? 1 : 0);
  for (std::uint32_t c = 0; c < n_classes; ++c) {
    gen_class(out, rng, index * 31 + c);
    emit(out, 0, "");
  }
  return out;
}

std::string python2_module_source(std::uint64_t index) {
  std::string out;
  emit(out, 0, "# legacy module " + std::to_string(index));
  emit(out, 0, "import os");
  emit(out, 0, "");
  emit(out, 0, "");
  switch (index % 3) {
    case 0:
      emit(out, 0, "def report(values):");
      emit(out, 1, "total = 0");
      emit(out, 1, "for v in values:");
      emit(out, 2, "total += v");
      emit(out, 1, "print \"total:\", total");
      emit(out, 1, "return total");
      break;
    case 1:
      emit(out, 0, "def safe_int(raw):");
      emit(out, 1, "try:");
      emit(out, 2, "return int(raw)");
      emit(out, 1, "except ValueError, exc:");
      emit(out, 2, "return 0");
      break;
    default:
      emit(out, 0, "FLAGS = 0755");
      emit(out, 0, "");
      emit(out, 0, "def flags():");
      emit(out, 1, "return FLAGS");
      break;
  }
  return out;
}

std::vector<FixtureFile> fixture_tree(std::uint64_t seed, int count,
                                      bool with_duplicates) {
  std::vector<FixtureFile> files;
  const std::vector<std::string> dirs = {"pkg", "pkg/sub", "tools"};
  for (int i = 0; i < count; ++i) {
    FixtureFile f;
    f.relative_path =
        dirs[static_cast<std::size_t>(i) % dirs.size()] + "/mod_" +
        std::to_string(i) + ".py";
    f.content = fixture_module_source(seed * 1009 + static_cast<std::uint64_t>(i));
    files.push_back(std::move(f));
  }
  if (with_duplicates && !files.empty()) {
    const int dups = std::max(1, count / 10);
    for (int d = 0; d < dups; ++d) {
      FixtureFile f;
      f.relative_path = "pkg/copy_" + std::to_string(d) + ".py";
      f.content = files[static_cast<std::size_t>(d) % files.size()].content;
      files.push_back(std::move(f));
    }
  }
  return files;
}

std::string make_git_repo(const std::filesystem::path& dir,
                          const std::vector<FixtureFile>& files) {
  std::filesystem::create_directories(dir);
  auto run = [&](std::vector<std::string> argv) {
    CommandResult r = run_command(argv, dir);
    if (!r.ok()) {
      throw std::runtime_error("git fixture command failed: " + r.err);
    }
    return r;
  };
  run({"git", "init", "--quiet", "--initial-branch=main", "."});
  for (const auto& f : files) {
    write_text(dir / f.relative_path, f.content);
  }
  run({"git", "add", "-A"});
  run({"git", "-c", "user.email=fixtures@example.com", "-c",
       "user.name=Fixture Bot", "commit", "--quiet", "-m", "snapshot"});
  CommandResult head = run({"git", "rev-parse", "HEAD"});
  std::string hash = head.out;
  while (!hash.empty() && (hash.back() == '\n' || hash.back() == '\r')) {
    hash.pop_back();
  }
  return hash;
}

void append_manifest_line(std::string& manifest,
                          const std::filesystem::path& repo_dir,
                          const std::string& commit) {
  manifest += repo_dir.generic_string() + " " + commit + "\n";
}

// --- statistics oracle fixture -------------------------------------------------

namespace {

OracleParam up(std::string name, std::string type = "", bool documented = false) {
  return OracleParam{std::move(name), std::move(type), documented};
}

// Builds one project worth of modules with regular, countable shapes.
OracleProject oracle_project(int which) {
  OracleProject project;
  project.author = "author" + std::to_string(which);
  project.repo = "repo" + std::to_string(which);

  for (int m = 0; m < 2 + (which % 2); ++m) {
    OracleModule mod;
    mod.relative_path = "src/module_" + std::to_string(m) + ".py";
    mod.imports = {"os", "json"};
    mod.variables = {{"LIMIT" + std::to_string(m), m % 2 == 0 ? "int" : ""},
                     {"NAMES", ""}};

    for (int f = 0; f < 3 + ((which + m) % 3); ++f) {
      OracleFunction fn;
      fn.name = "func_" + std::to_string(m) + "_" + std::to_string(f);
      const int shape = (which + m + f) % 4;
      if (shape == 0) {
        fn.params = {up("count", "int", true), up("label", "str", true)};
        fn.ret_type = "int";
        fn.doc_format = 1;
        fn.variables = {{"acc", "int"}};
        fn.return_count = 1;
      } else if (shape == 1) {
        fn.params = {up("raw", "", true), up("limit", "int", false)};
        fn.ret_type = "";
        fn.doc_format = 2;
        fn.variables = {{"tmp", ""}};
        fn.return_count = 2;
      } else if (shape == 2) {
        fn.params = {up("values", "List[int]", true)};
        fn.ret_type = "bool";
        fn.doc_format = 3;
        fn.variables = {};
        fn.return_count = 1;
      } else {
        fn.params = {up("data", "", false)};
        fn.ret_type = "";
        fn.doc_format = 0;
        fn.variables = {{"out", "List[str]"}};
        fn.return_count = 1;
      }
      mod.funcs.push_back(std::move(fn));
    }

    OracleClass cls;
    cls.name = "Handler" + std::to_string(m);
    cls.variables = {{"kind", m % 2 == 0 ? "str" : ""}};
    for (int f = 0; f < 2; ++f) {
      OracleFunction fn;
      fn.name = "method_" + std::to_string(f);
      fn.method = true;
      if ((which + f) % 2 == 0) {
        fn.params = {up("key", "str", true)};
        fn.ret_type = "Optional[str]";
        fn.doc_format = 1 + ((which + m) % 3);
        fn.variables = {};
      } else {
        fn.params = {up("key", "", false), up("default", "", false)};
        fn.ret_type = "";
        fn.doc_format = 0;
        fn.variables = {{"found", "bool"}};
      }
      fn.return_count = 1;
      cls.methods.push_back(std::move(fn));
    }
    mod.classes.push_back(std::move(cls));
    project.modules.push_back(std::move(mod));
  }
  return project;
}

void render_oracle_function(std::string& out, const OracleFunction& fn,
                            int indent) {
  std::string sig;
  if (fn.method) sig = "self";
  for (const auto& p : fn.params) {
    if (!sig.empty()) sig += ", ";
    sig += p.name;
    if (!p.type.empty()) sig += ": " + p.type;
  }
  std::string head = "def " + fn.name + "(" + sig + ")";
  if (!fn.ret_type.empty()) head += " -> " + fn.ret_type;
  emit(out, indent, head + ":");

  if (fn.doc_format != 0) {
    std::vector<std::string> documented;
    for (const auto& p : fn.params) {
      if (p.documented) documented.push_back(p.name);
    }
    Rng throwaway(1);
    for (const auto& line :
         docstring_template(throwaway, fn.doc_format, documented)) {
      emit(out, indent + 1 + line.rel, line.text);
    }
  }
  for (const auto& [name, type] : fn.variables) {
    if (!type.empty()) {
      emit(out, indent + 1, name + ": " + type + " = 0");
    } else {
      emit(out, indent + 1, name + " = 0");
    }
  }
  const std::string use =
      fn.params.empty() ? "0" : fn.params.front().name;
  if (fn.return_count == 0) {
    emit(out, indent + 1, "pass");
  } else if (fn.return_count == 1) {
    emit(out, indent + 1, "return " + use);
  } else {
    emit(out, indent + 1, "if " + use + ":");
    emit(out, indent + 2, "return " + use);
    emit(out, indent + 1, "return None");
  }
}

}  // namespace

std::vector<OracleProject> stats_oracle_projects() {
  std::vector<OracleProject> projects;
  for (int p = 0; p < 5; ++p) projects.push_back(oracle_project(p));
  return projects;
}

std::string render_oracle_module(const OracleModule& module) {
  std::string out;
  for (const auto& imp : module.imports) emit(out, 0, "import " + imp);
  emit(out, 0, "");
  for (const auto& [name, type] : module.variables) {
    if (!type.empty()) {
      emit(out, 0, name + ": " + type + " = 0");
    } else {
      emit(out, 0, name + " = 0");
    }
  }
  emit(out, 0, "");
  emit(out, 0, "");
  for (const auto& fn : module.funcs) {
    render_oracle_function(out, fn, 0);
    emit(out, 0, "");
    emit(out, 0, "");
  }
  for (const auto& cls : module.classes) {
    emit(out, 0, "class " + cls.name + ":");
    for (const auto& [name, type] : cls.variables) {
      if (!type.empty()) {
        emit(out, 1, name + ": " + type + " = \"\"");
      } else {
        emit(out, 1, name + " = \"\"");
      }
    }
    for (const auto& fn : cls.methods) {
      emit(out, 0, "");
      render_oracle_function(out, fn, 1);
    }
    emit(out, 0, "");
    emit(out, 0, "");
  }
  return out;
}

int oracle_sloc(const std::string& text) {
  int count = 0;
  bool in_triple = false;
  std::istringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) {
    int quotes = 0;
    for (std::size_t pos = 0; (pos = line.find("\"\"\"", pos)) != std::string::npos;
         pos += 3) {
      ++quotes;
    }
    if (in_triple) {
      ++count;  // interior (or closing) line of a string literal
    } else {
      std::size_t first = line.find_first_not_of(" \t\r");
      if (first != std::string::npos && line[first] != '#') ++count;
    }
    if (quotes % 2 == 1) in_triple = !in_triple;
  }
  return count;
}

// --- schema checker -------------------------------------------------------------

namespace {

using Json = nlohmann::ordered_json;

std::string expect_keys(const Json& obj, const std::vector<std::string>& keys,
                        const std::string& where) {
  if (!obj.is_object()) return where + ": expected an object";
  std::vector<std::string> actual;
  for (auto it = obj.begin(); it != obj.end(); ++it) actual.push_back(it.key());
  std::vector<std::string> expected = keys;
  if (actual != expected) {
    std::string got;
    for (const auto& k : actual) got += k + ",";
    return where + ": key set/order mismatch, got [" + got + "]";
  }
  return "";
}

std::string check_string_map(const Json& obj, const std::string& where) {
  if (!obj.is_object()) return where + ": expected an object";
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (it.key().empty()) return where + ": empty key";
    if (!it.value().is_string()) return where + "." + it.key() + ": expected string";
  }
  return "";
}

std::string check_function(const Json& fn, const std::string& where) {
  std::string err = expect_keys(
      fn,
      {"name", "params", "ret_exprs", "ret_type", "variables", "params_occur",
       "docstring"},
      where);
  if (!err.empty()) return err;
  if (!fn["name"].is_string() || fn["name"].get<std::string>().empty()) {
    return where + ".name: expected non-empty string";
  }
  if ((err = check_string_map(fn["params"], where + ".params")) != "") return err;
  if (!fn["ret_exprs"].is_array()) return where + ".ret_exprs: expected array";
  for (const auto& e : fn["ret_exprs"]) {
    if (!e.is_string()) return where + ".ret_exprs: expected string entries";
  }
  if (!fn["ret_type"].is_string()) return where + ".ret_type: expected string";
  if ((err = check_string_map(fn["variables"], where + ".variables")) != "") {
    return err;
  }
  const Json& occ = fn["params_occur"];
  if (!occ.is_object()) return where + ".params_occur: expected object";
  for (auto it = occ.begin(); it != occ.end(); ++it) {
    if (!fn["params"].contains(it.key())) {
      return where + ".params_occur." + it.key() + ": not a parameter";
    }
    if (!it.value().is_array()) {
      return where + ".params_occur." + it.key() + ": expected array";
    }
    for (const auto& window : it.value()) {
      if (!window.is_array()) {
        return where + ".params_occur." + it.key() + ": expected array of arrays";
      }
      for (const auto& tok : window) {
        if (!tok.is_string()) {
          return where + ".params_occur." + it.key() + ": expected token strings";
        }
      }
    }
  }
  err = expect_keys(fn["docstring"], {"func", "ret", "long_descr"},
                    where + ".docstring");
  if (!err.empty()) return err;
  for (const auto& key : {"func", "ret", "long_descr"}) {
    if (!fn["docstring"][key].is_string()) {
      return where + ".docstring." + key + ": expected string";
    }
  }
  return "";
}

std::string check_module(const Json& mod, const std::string& where) {
  std::string err = expect_keys(
      mod,
      {"untyped_seq", "typed_seq", "imports", "variables", "classes", "funcs",
       "set"},
      where);
  if (!err.empty()) return err;
  if (!mod["untyped_seq"].is_string()) return where + ".untyped_seq: expected string";
  if (!mod["typed_seq"].is_string()) return where + ".typed_seq: expected string";
  if (!mod["imports"].is_array()) return where + ".imports: expected array";
  for (const auto& imp : mod["imports"]) {
    if (!imp.is_string()) return where + ".imports: expected string entries";
  }
  if ((err = check_string_map(mod["variables"], where + ".variables")) != "") {
    return err;
  }
  if (!mod["classes"].is_array()) return where + ".classes: expected array";
  int ci = 0;
  for (const auto& cls : mod["classes"]) {
    std::string cw = where + ".classes[" + std::to_string(ci++) + "]";
    err = expect_keys(cls, {"name", "variables", "funcs"}, cw);
    if (!err.empty()) return err;
    if (!cls["name"].is_string() || cls["name"].get<std::string>().empty()) {
      return cw + ".name: expected non-empty string";
    }
    if ((err = check_string_map(cls["variables"], cw + ".variables")) != "") {
      return err;
    }
    if (!cls["funcs"].is_array()) return cw + ".funcs: expected array";
    int fi = 0;
    for (const auto& fn : cls["funcs"]) {
      err = check_function(fn, cw + ".funcs[" + std::to_string(fi++) + "]");
      if (!err.empty()) return err;
    }
  }
  if (!mod["funcs"].is_array()) return where + ".funcs: expected array";
  int fi = 0;
  for (const auto& fn : mod["funcs"]) {
    err = check_function(fn, where + ".funcs[" + std::to_string(fi++) + "]");
    if (!err.empty()) return err;
  }
  if (!mod["set"].is_string()) return where + ".set: expected string";
  const std::string label = mod["set"].get<std::string>();
  if (label != "train" && label != "valid" && label != "test") {
    return where + ".set: unexpected label \"" + label + "\"";
  }
  return "";
}

}  // namespace

std::string check_project_json_schema(const nlohmann::ordered_json& doc) {
  if (!doc.is_object() || doc.size() != 1) {
    return "document: expected a single author/repo key";
  }
  const std::string project = doc.begin().key();
  if (project.find('/') == std::string::npos) {
    return "document: top-level key lacks author/repo form";
  }
  const Json& src_files = doc.begin().value();
  if (!src_files.is_object()) return project + ": expected src_files object";
  for (auto it = src_files.begin(); it != src_files.end(); ++it) {
    if (it.key().empty()) return project + ": empty file path";
    std::string err = check_module(it.value(), project + "/" + it.key());
    if (!err.empty()) return err;
  }
  return "";
}

}  // namespace typecorpus::testing
