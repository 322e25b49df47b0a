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

#include "typecorpus/nlp.hpp"

#include <cctype>
#include <sstream>

#include "typecorpus/errors.hpp"
#include "typecorpus/source_text.hpp"

namespace typecorpus {
namespace {

enum class CharClass { Upper, Lower, Digit, Separator };

CharClass classify(unsigned char c) {
  if (c >= 'A' && c <= 'Z') return CharClass::Upper;
  if (c >= 'a' && c <= 'z') return CharClass::Lower;
  if (c >= '0' && c <= '9') return CharClass::Digit;
  if (c >= 0x80) return CharClass::Lower;  // non-ASCII identifier bytes
  return CharClass::Separator;
}

bool is_alpha_class(CharClass c) {
  return c == CharClass::Upper || c == CharClass::Lower;
}

}  // namespace

std::vector<std::string> split_identifier(std::string_view name) {
  std::vector<std::string> out;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) {
      for (char& c : current) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      }
      out.push_back(current);
      current.clear();
    }
  };
  for (std::size_t i = 0; i < name.size(); ++i) {
    const CharClass cur = classify(static_cast<unsigned char>(name[i]));
    if (cur == CharClass::Separator) {
      flush();
      continue;
    }
    if (!current.empty()) {
      const CharClass prev =
          classify(static_cast<unsigned char>(name[i - 1]));
      const bool camel = prev == CharClass::Lower && cur == CharClass::Upper;
      const bool digit_edge = (prev == CharClass::Digit) != (cur == CharClass::Digit);
      const bool acronym_end =
          prev == CharClass::Upper && cur == CharClass::Upper &&
          i + 1 < name.size() &&
          classify(static_cast<unsigned char>(name[i + 1])) == CharClass::Lower;
      if (camel || digit_edge || acronym_end) flush();
    }
    current += name[i];
    (void)is_alpha_class;
  }
  flush();
  return out;
}

namespace {

bool is_vowel_letter(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool has_vowel(std::string_view word) {
  for (char c : word) {
    if (is_vowel_letter(c) || c == 'y') return true;
  }
  return false;
}

// Porter-style consonant/vowel classification: 'y' is a vowel after a
// consonant.
std::vector<bool> consonant_map(std::string_view word) {
  std::vector<bool> cons(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    char c = word[i];
    if (is_vowel_letter(c)) {
      cons[i] = false;
    } else if (c == 'y') {
      cons[i] = i == 0 ? true : !cons[i - 1];
    } else {
      cons[i] = true;
    }
  }
  return cons;
}

int porter_measure(std::string_view word) {
  const std::vector<bool> cons = consonant_map(word);
  int m = 0;
  for (std::size_t i = 1; i < cons.size(); ++i) {
    if (cons[i] && !cons[i - 1]) ++m;  // V -> C transition
  }
  return m;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool in_undouble_set(char c) {
  return c == 'b' || c == 'd' || c == 'g' || c == 'm' || c == 'n' ||
         c == 'p' || c == 'r' || c == 't';
}

// Repairs a stem after -ing/-ed removal: undoubles trailing consonants
// ("mapp" -> "map") and restores a dropped final 'e' on short CVC stems
// ("mak" -> "make").
std::string fix_stem(std::string stem) {
  const std::size_t n = stem.size();
  if (n >= 4 && stem[n - 1] == stem[n - 2] && in_undouble_set(stem[n - 1])) {
    stem.pop_back();
    return stem;
  }
  if (n >= 3) {
    const std::vector<bool> cons = consonant_map(stem);
    const char last = stem[n - 1];
    if (cons[n - 3] == false && cons[n - 2] == false) {
      // vowel-vowel-? never takes an 'e'
    } else if (cons[n - 1] && !cons[n - 2] && cons[n - 3] && last != 'w' &&
               last != 'x' && last != 'y' && porter_measure(stem) == 1) {
      stem += 'e';
    }
  }
  return stem;
}

std::string apply_rules(const std::string& token) {
  const std::size_t n = token.size();
  // Plurals.
  if (ends_with(token, "ies") && n >= 5) {
    return token.substr(0, n - 3) + "y";
  }
  if (ends_with(token, "sses")) return token.substr(0, n - 2);
  if ((ends_with(token, "zzes") || ends_with(token, "ches") ||
       ends_with(token, "shes") || ends_with(token, "xes")) &&
      n >= 5) {
    return token.substr(0, n - 2);
  }
  if (ends_with(token, "oes") && n >= 4) return token.substr(0, n - 2);
  if (ends_with(token, "s") && n >= 3 && !ends_with(token, "ss") &&
      !ends_with(token, "us") && !ends_with(token, "is")) {
    return token.substr(0, n - 1);
  }
  // A suffix only strips when the syllable right before it carries a vowel;
  // this keeps noun stems like "string" (-> "str") intact.
  const auto strippable = [&](std::size_t suffix_len) {
    const std::string_view stem(token.data(), n - suffix_len);
    if (!has_vowel(stem)) return false;
    return has_vowel(stem.substr(stem.size() >= 3 ? stem.size() - 3 : 0));
  };
  // Gerunds.
  if (ends_with(token, "ing") && n >= 6) {
    if (!strippable(3)) return token;
    return fix_stem(token.substr(0, n - 3));
  }
  // Past tense.
  if (ends_with(token, "ied") && n >= 5) {
    return token.substr(0, n - 3) + "y";
  }
  if (ends_with(token, "eed")) return token;
  if (ends_with(token, "ed") && n >= 4) {
    if (!strippable(2)) return token;
    return fix_stem(token.substr(0, n - 2));
  }
  return token;
}

std::unordered_map<std::string, std::string> parse_table(
    std::string_view text) {
  std::unordered_map<std::string, std::string> table;
  std::istringstream stream{std::string(text)};
  std::string line;
  while (std::getline(stream, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::string token;
    std::string lemma;
    if (row >> token >> lemma) table[token] = lemma;
  }
  return table;
}

constexpr std::string_view kBuiltinExceptions =
    R"(# Lemmatizer exception table: token SPACE lemma, one pair per line.
# Lines starting with '#' are comments.
analyses analysis
cached cache
caches cache
caching cache
children child
chose choose
chosen choose
classes class
closed close
closing close
created create
creating create
data data
decoded decode
decoding decode
deleted delete
deleting delete
did do
done do
encoded encode
encoding encode
found find
gave give
given give
gone go
got get
had have
has have
ids id
indices index
kept keep
left leave
lost lose
made make
matrices matrix
merged merge
merging merge
meta meta
parsed parse
parses parse
parsing parse
processes process
ran run
removed remove
removing remove
said say
saved save
saving save
sent send
statuses status
stored store
storing store
taken take
took take
updated update
updating update
used use
uses use
using use
vertices vertex
was be
went go
were be
wrote write
written write
)";

}  // namespace

std::string_view builtin_lemma_exceptions() { return kBuiltinExceptions; }

Lemmatizer::Lemmatizer() : exceptions_(parse_table(kBuiltinExceptions)) {}

Lemmatizer::Lemmatizer(const std::filesystem::path& table_path)
    : exceptions_(parse_table(read_file_bytes(table_path))) {}

std::string Lemmatizer::lemmatize(std::string_view token) const {
  std::string current(token);
  for (int iter = 0; iter < 5; ++iter) {
    auto hit = exceptions_.find(current);
    std::string next = hit != exceptions_.end() ? hit->second
                                                : apply_rules(current);
    if (next == current) break;
    current = std::move(next);
  }
  return current;
}

std::string Lemmatizer::normalize_identifier(std::string_view name) const {
  std::string out;
  for (const std::string& sub : split_identifier(name)) {
    if (!out.empty()) out += ' ';
    out += lemmatize(sub);
  }
  return out;
}

}  // namespace typecorpus
