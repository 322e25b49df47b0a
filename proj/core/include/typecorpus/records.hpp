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

#ifndef TYPECORPUS_RECORDS_HPP_
#define TYPECORPUS_RECORDS_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace typecorpus {

// Insertion-ordered name -> value map. Python declaration order matters for
// parameters and variables, so a plain std::map will not do.
class OrderedMap {
 public:
  using value_type = std::pair<std::string, std::string>;
  using const_iterator = std::vector<value_type>::const_iterator;

  bool contains(const std::string& key) const { return find(key) != nullptr; }

  const std::string* find(const std::string& key) const {
    for (const auto& [k, v] : items_) {
      if (k == key) return &v;
    }
    return nullptr;
  }

  // Inserts on first sight; a later non-empty value overwrites an earlier one.
  void put(const std::string& key, const std::string& value) {
    for (auto& [k, v] : items_) {
      if (k == key) {
        if (!value.empty()) v = value;
        return;
      }
    }
    items_.emplace_back(key, value);
  }

  // Unconditional append, used when the caller guarantees key uniqueness.
  void append(const std::string& key, const std::string& value) {
    items_.emplace_back(key, value);
  }

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const_iterator begin() const { return items_.begin(); }
  const_iterator end() const { return items_.end(); }

  friend bool operator==(const OrderedMap&, const OrderedMap&) = default;

 private:
  std::vector<value_type> items_;
};

struct DocstringRecord {
  std::string func;        // one-line description
  std::string ret;         // returns-section text
  std::string long_descr;  // remaining prose, structured sections included

  bool empty() const { return func.empty() && ret.empty() && long_descr.empty(); }
  friend bool operator==(const DocstringRecord&, const DocstringRecord&) = default;
};

// One occurrence window: the identifier/operator tokens of a simple statement
// that mentions the parameter.
using OccurrenceWindow = std::vector<std::string>;

struct FunctionRecord {
  std::string name;
  OrderedMap params;                   // param name -> annotation text or ""
  std::vector<std::string> ret_exprs;  // verbatim return statements
  std::string ret_type;                // annotation after "->" or ""
  OrderedMap variables;                // local name -> annotation text or ""
  // param name -> statement windows mentioning it; keys mirror params.
  std::vector<std::pair<std::string, std::vector<OccurrenceWindow>>> params_occur;
  DocstringRecord docstring;

  friend bool operator==(const FunctionRecord&, const FunctionRecord&) = default;
};

struct ClassRecord {
  std::string name;
  OrderedMap variables;
  std::vector<FunctionRecord> funcs;  // methods in source order

  friend bool operator==(const ClassRecord&, const ClassRecord&) = default;
};

enum class SetLabel { Unassigned, Train, Valid, Test };

inline std::string to_string(SetLabel label) {
  switch (label) {
    case SetLabel::Train: return "train";
    case SetLabel::Valid: return "valid";
    case SetLabel::Test: return "test";
    case SetLabel::Unassigned: return "unassigned";
  }
  return "unassigned";
}

inline SetLabel set_label_from_string(const std::string& text) {
  if (text == "train") return SetLabel::Train;
  if (text == "valid") return SetLabel::Valid;
  if (text == "test") return SetLabel::Test;
  return SetLabel::Unassigned;
}

struct ModuleRecord {
  std::string file_path;
  std::string untyped_seq;  // space-joined normalized token stream
  std::string typed_seq;    // aligned type stream, "0" fillers
  std::vector<std::string> imports;
  OrderedMap variables;  // module-level variables
  std::vector<ClassRecord> classes;
  std::vector<FunctionRecord> funcs;
  SetLabel set_label = SetLabel::Unassigned;

  friend bool operator==(const ModuleRecord&, const ModuleRecord&) = default;
};

struct ParseFailure {
  std::string file_path;
  std::string reason;
};

struct ProjectRecord {
  std::string author;
  std::string repo;
  // file path -> module, keys kept sorted.
  std::map<std::string, ModuleRecord> src_files;

  std::string qualified_name() const { return author + "/" + repo; }
};

}  // namespace typecorpus

#endif  // TYPECORPUS_RECORDS_HPP_
