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

#ifndef TYPECORPUS_NLP_HPP_
#define TYPECORPUS_NLP_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace typecorpus {

// Splits an identifier into lowercase subtokens on underscores, camel-case
// boundaries, and digit runs. Acronym runs stay together except the final
// capital that starts a new word: "HTTPServer" -> {http, server}.
std::vector<std::string> split_identifier(std::string_view name);

// Rule-based lemmatizer (plural/gerund/past suffixes plus an exception
// table). Deterministic; output is a fixed point of the rules.
class Lemmatizer {
 public:
  // Uses the built-in copy of the exception table.
  Lemmatizer();
  // Loads the two-column exception table from `table_path`.
  explicit Lemmatizer(const std::filesystem::path& table_path);

  std::string lemmatize(std::string_view token) const;

  // "user_ids" -> "user id": split, lemmatize, space-join.
  std::string normalize_identifier(std::string_view name) const;

  const std::unordered_map<std::string, std::string>& exceptions() const {
    return exceptions_;
  }

 private:
  std::unordered_map<std::string, std::string> exceptions_;
};

// The built-in exception table, byte-identical to the shipped resource file.
std::string_view builtin_lemma_exceptions();

}  // namespace typecorpus

#endif  // TYPECORPUS_NLP_HPP_
