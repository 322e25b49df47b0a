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

#ifndef TYPECORPUS_SEQ_HPP_
#define TYPECORPUS_SEQ_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "typecorpus/pyast.hpp"
#include "typecorpus/pylex.hpp"

namespace typecorpus {

// One entry of the normalized token stream. `token_index` points back into
// the raw lexer stream; `identifier` marks plain names eligible for type
// alignment (literal placeholders and operators are not).
struct NormalizedToken {
  std::string text;
  std::size_t token_index = 0;
  bool identifier = false;
};

struct TokenSequencePair {
  std::vector<std::string> untyped_seq;
  std::vector<std::string> typed_seq;  // type strings or "0", same length
};

// Drops comments and structural tokens, masks string literals as [string]
// and numeric literals as [number], and keeps everything else in source
// order. Idempotent when its output is space-joined and re-lexed: a literal
// "[string]"/"[number]" triple collapses back to one placeholder token.
std::vector<NormalizedToken> normalize_tokens(const std::vector<py::Token>& tokens);

// Builds the aligned untyped/typed sequences for a parsed module. An
// identifier whose type is known in its enclosing scope (parameter or
// variable annotation, or a function name carrying its return type) emits
// that type, with internal spaces stripped; every other position emits "0".
TokenSequencePair align_types(const py::Module& module,
                              const std::vector<py::Token>& tokens);

// Space-joined single-line serialization used by the module record.
std::string join_sequence(const std::vector<std::string>& tokens);

}  // namespace typecorpus

#endif  // TYPECORPUS_SEQ_HPP_
