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

#ifndef TYPECORPUS_PYPARSE_HPP_
#define TYPECORPUS_PYPARSE_HPP_

#include <memory>
#include <string>
#include <vector>

#include "typecorpus/pyast.hpp"
#include "typecorpus/pylex.hpp"

namespace typecorpus::py {

struct ParseResult {
  bool ok = false;
  std::unique_ptr<Module> module;
  std::string error;
  std::size_t error_line = 0;
};

// Parses a lexed token stream into a module AST. Node spans index into
// `tokens`. Legacy constructs that only parse under Python 2 (print
// statements, comma except clauses, backtick repr) are rejected.
ParseResult parse(const std::vector<Token>& tokens);

}  // namespace typecorpus::py

#endif  // TYPECORPUS_PYPARSE_HPP_
