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

#include "typecorpus/stats.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include "typecorpus/docstring.hpp"
#include "typecorpus/nlp.hpp"
#include "typecorpus/pylex.hpp"

namespace typecorpus {
namespace {

// A class method's first parameter named self/cls is the receiver; it stays
// in the record but is excluded from the argument statistics.
bool is_receiver(const FunctionRecord& func, std::size_t param_index,
                 bool is_method) {
  if (!is_method || param_index != 0) return false;
  const std::string& name = func.params.begin()[param_index].first;
  return name == "self" || name == "cls";
}

bool function_has_annotations(const FunctionRecord& func, bool is_method) {
  if (!func.ret_type.empty()) return true;
  std::size_t index = 0;
  for (const auto& [name, type] : func.params) {
    if (!is_receiver(func, index, is_method) && !type.empty()) return true;
    ++index;
  }
  return false;
}

// Mutable view over one split bucket plus the shared "all" bucket.
struct BucketRefs {
  StatsCounters& counters;
  std::set<std::string>& unique_types;
  std::set<std::string>& repositories;
};

class Accumulator {
 public:
  explicit Accumulator(CorpusStats& stats) : stats_(stats) {}

  void add_module(const std::string& repo_name, const ModuleRecord& module,
                  std::size_t sloc) {
    BucketRefs bucket = bucket_for(module.set_label);
    BucketRefs all{stats_.all, unique_all_, repos_all_};

    bucket.repositories.insert(repo_name);
    all.repositories.insert(repo_name);

    count(bucket, all, [&](StatsCounters& c) {
      c.files += 1;
      c.sloc += sloc;
    });

    bool annotated = false;
    for (const FunctionRecord& func : module.funcs) {
      add_function(func, /*is_method=*/false, bucket, all);
      annotated = annotated || function_has_annotations(func, false);
    }
    for (const ClassRecord& cls : module.classes) {
      for (const auto& [name, type] : cls.variables) {
        if (!type.empty()) add_type(type, bucket, all);
      }
      for (const FunctionRecord& func : cls.funcs) {
        add_function(func, /*is_method=*/true, bucket, all);
        annotated = annotated || function_has_annotations(func, true);
      }
    }
    for (const auto& [name, type] : module.variables) {
      if (!type.empty()) add_type(type, bucket, all);
    }
    if (annotated) {
      count(bucket, all, [](StatsCounters& c) { c.files_with_annotations += 1; });
    }
  }

  void finish() {
    stats_.all.repositories = repos_all_.size();
    stats_.train.repositories = repos_train_.size();
    stats_.valid.repositories = repos_valid_.size();
    stats_.test.repositories = repos_test_.size();
    stats_.all.types_unique = unique_all_.size();
    stats_.train.types_unique = unique_train_.size();
    stats_.valid.types_unique = unique_valid_.size();
    stats_.test.types_unique = unique_test_.size();
  }

 private:
  template <typename Fn>
  void count(BucketRefs& bucket, BucketRefs& all, Fn&& fn) {
    fn(bucket.counters);
    fn(all.counters);
  }

  BucketRefs bucket_for(SetLabel label) {
    switch (label) {
      case SetLabel::Train:
        return {stats_.train, unique_train_, repos_train_};
      case SetLabel::Valid:
        return {stats_.valid, unique_valid_, repos_valid_};
      case SetLabel::Test:
        return {stats_.test, unique_test_, repos_test_};
      case SetLabel::Unassigned:
        break;
    }
    // Unassigned modules should not reach stats; fold them into train to
    // keep totals consistent rather than dropping data silently.
    return {stats_.train, unique_train_, repos_train_};
  }

  void add_type(const std::string& type, BucketRefs& bucket, BucketRefs& all) {
    count(bucket, all, [](StatsCounters& c) { c.types_total += 1; });
    bucket.unique_types.insert(type);
    all.unique_types.insert(type);
  }

  void add_function(const FunctionRecord& func, bool is_method,
                    BucketRefs& bucket, BucketRefs& all) {
    count(bucket, all, [&](StatsCounters& c) {
      c.functions += 1;
      if (!func.docstring.func.empty()) c.functions_with_comment += 1;
      if (!func.ret_type.empty()) c.functions_with_ret_type += 1;
    });
    if (!func.ret_type.empty()) add_type(func.ret_type, bucket, all);

    const std::vector<std::string> documented = documented_param_names(
        func.docstring.func + "\n" + func.docstring.long_descr);
    std::set<std::string> documented_raw(documented.begin(), documented.end());
    std::set<std::string> documented_norm;
    for (const std::string& name : documented) {
      documented_norm.insert(lemmatizer_.normalize_identifier(name));
    }

    std::size_t index = 0;
    for (const auto& [name, type] : func.params) {
      const bool receiver = is_receiver(func, index, is_method);
      ++index;
      if (receiver) continue;
      const bool commented =
          documented_raw.count(name) > 0 ||
          documented_norm.count(lemmatizer_.normalize_identifier(name)) > 0;
      count(bucket, all, [&](StatsCounters& c) {
        c.arguments += 1;
        if (commented) c.arguments_with_comment += 1;
        if (!type.empty()) c.arguments_with_annotations += 1;
      });
      if (!type.empty()) add_type(type, bucket, all);
    }

    for (const auto& [name, type] : func.variables) {
      if (!type.empty()) add_type(type, bucket, all);
    }
  }

  CorpusStats& stats_;
  Lemmatizer lemmatizer_;
  std::set<std::string> unique_all_, unique_train_, unique_valid_, unique_test_;
  std::set<std::string> repos_all_, repos_train_, repos_valid_, repos_test_;
};

void for_each_type_occurrence(const std::vector<ProjectRecord>& projects,
                              const std::function<void(const std::string&)>& fn) {
  for (const ProjectRecord& project : projects) {
    for (const auto& [path, module] : project.src_files) {
      auto visit_function = [&](const FunctionRecord& func, bool is_method) {
        if (!func.ret_type.empty()) fn(func.ret_type);
        std::size_t index = 0;
        for (const auto& [name, type] : func.params) {
          const bool receiver = is_receiver(func, index, is_method);
          ++index;
          if (!receiver && !type.empty()) fn(type);
        }
        for (const auto& [name, type] : func.variables) {
          if (!type.empty()) fn(type);
        }
      };
      for (const FunctionRecord& func : module.funcs) visit_function(func, false);
      for (const ClassRecord& cls : module.classes) {
        for (const auto& [name, type] : cls.variables) {
          if (!type.empty()) fn(type);
        }
        for (const FunctionRecord& func : cls.funcs) visit_function(func, true);
      }
      for (const auto& [name, type] : module.variables) {
        if (!type.empty()) fn(type);
      }
    }
  }
}

nlohmann::ordered_json counters_to_json(const StatsCounters& c) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  out["repositories"] = c.repositories;
  out["sloc"] = c.sloc;
  out["files"] = c.files;
  out["files_with_annotations"] = c.files_with_annotations;
  out["functions"] = c.functions;
  out["functions_with_comment"] = c.functions_with_comment;
  out["functions_with_ret_type"] = c.functions_with_ret_type;
  out["arguments"] = c.arguments;
  out["arguments_with_comment"] = c.arguments_with_comment;
  out["arguments_with_annotations"] = c.arguments_with_annotations;
  out["types_total"] = c.types_total;
  out["types_unique"] = c.types_unique;
  return out;
}

}  // namespace

std::size_t count_sloc(std::string_view source_text) {
  const py::LexResult lexed = py::lex(source_text);
  std::set<std::size_t> lines;
  for (const py::Token& tok : lexed.tokens) {
    switch (tok.kind) {
      case py::TokenKind::Comment:
      case py::TokenKind::Newline:
      case py::TokenKind::Indent:
      case py::TokenKind::Dedent:
      case py::TokenKind::EndOfFile:
        break;
      default:
        for (std::size_t line = tok.line; line <= tok.end_line; ++line) {
          lines.insert(line);
        }
        break;
    }
  }
  return lines.size();
}

CorpusStats corpus_stats(const std::vector<ProjectRecord>& projects,
                         const std::map<std::string, std::size_t>& sloc_by_file) {
  CorpusStats stats;
  Accumulator acc(stats);
  for (const ProjectRecord& project : projects) {
    for (const auto& [path, module] : project.src_files) {
      const auto it = sloc_by_file.find(project.qualified_name() + "/" + path);
      const std::size_t sloc = it == sloc_by_file.end() ? 0 : it->second;
      acc.add_module(project.qualified_name(), module, sloc);
    }
  }
  acc.finish();
  return stats;
}

std::vector<TypeFrequency> top_n_types(const std::vector<ProjectRecord>& projects,
                                       std::size_t n) {
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t total = 0;
  for_each_type_occurrence(projects, [&](const std::string& type) {
    ++counts[type];
    ++total;
  });

  std::vector<std::pair<std::string, std::uint64_t>> ranked(counts.begin(),
                                                            counts.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (ranked.size() > n) ranked.resize(n);

  std::vector<TypeFrequency> out;
  out.reserve(ranked.size());
  double cumulative = 0.0;
  for (const auto& [type, count] : ranked) {
    TypeFrequency freq;
    freq.type_name = type;
    freq.occurrences = count;
    freq.share_pct = total == 0 ? 0.0
                                : 100.0 * static_cast<double>(count) /
                                      static_cast<double>(total);
    cumulative += freq.share_pct;
    freq.cumulative_share_pct = cumulative;
    out.push_back(std::move(freq));
  }
  return out;
}

std::string render_stats_table(const CorpusStats& stats) {
  const std::pair<const char*, std::array<std::uint64_t, 4>> rows[] = {
      {"repositories",
       {stats.all.repositories, stats.train.repositories,
        stats.valid.repositories, stats.test.repositories}},
      {"sloc", {stats.all.sloc, stats.train.sloc, stats.valid.sloc,
                stats.test.sloc}},
      {"files", {stats.all.files, stats.train.files, stats.valid.files,
                 stats.test.files}},
      {"files_with_annotations",
       {stats.all.files_with_annotations, stats.train.files_with_annotations,
        stats.valid.files_with_annotations, stats.test.files_with_annotations}},
      {"functions", {stats.all.functions, stats.train.functions,
                     stats.valid.functions, stats.test.functions}},
      {"functions_with_comment",
       {stats.all.functions_with_comment, stats.train.functions_with_comment,
        stats.valid.functions_with_comment, stats.test.functions_with_comment}},
      {"functions_with_ret_type",
       {stats.all.functions_with_ret_type, stats.train.functions_with_ret_type,
        stats.valid.functions_with_ret_type, stats.test.functions_with_ret_type}},
      {"arguments", {stats.all.arguments, stats.train.arguments,
                     stats.valid.arguments, stats.test.arguments}},
      {"arguments_with_comment",
       {stats.all.arguments_with_comment, stats.train.arguments_with_comment,
        stats.valid.arguments_with_comment, stats.test.arguments_with_comment}},
      {"arguments_with_annotations",
       {stats.all.arguments_with_annotations,
        stats.train.arguments_with_annotations,
        stats.valid.arguments_with_annotations,
        stats.test.arguments_with_annotations}},
      {"types_total", {stats.all.types_total, stats.train.types_total,
                       stats.valid.types_total, stats.test.types_total}},
      {"types_unique", {stats.all.types_unique, stats.train.types_unique,
                        stats.valid.types_unique, stats.test.types_unique}},
  };

  std::ostringstream out;
  out << std::left << std::setw(28) << "metric" << std::right << std::setw(12)
      << "all" << std::setw(12) << "train" << std::setw(12) << "valid"
      << std::setw(12) << "test" << '\n';
  for (const auto& [name, values] : rows) {
    out << std::left << std::setw(28) << name << std::right;
    for (const std::uint64_t value : values) out << std::setw(12) << value;
    out << '\n';
  }
  return out.str();
}

nlohmann::ordered_json stats_to_json(const CorpusStats& stats) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  out["all"] = counters_to_json(stats.all);
  out["train"] = counters_to_json(stats.train);
  out["valid"] = counters_to_json(stats.valid);
  out["test"] = counters_to_json(stats.test);
  return out;
}

std::string render_top_types_csv(const std::vector<TypeFrequency>& types) {
  std::string out = "type,occurrences\n";
  for (const TypeFrequency& freq : types) {
    std::string name = freq.type_name;
    const bool quote = name.find(',') != std::string::npos ||
                       name.find('"') != std::string::npos;
    if (quote) {
      std::string quoted = "\"";
      for (const char c : name) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      quoted += '"';
      name = std::move(quoted);
    }
    out += name;
    out += ',';
    out += std::to_string(freq.occurrences);
    out += '\n';
  }
  return out;
}

}  // namespace typecorpus
