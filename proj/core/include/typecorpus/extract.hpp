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

#ifndef TYPECORPUS_EXTRACT_HPP_
#define TYPECORPUS_EXTRACT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "typecorpus/pyast.hpp"
#include "typecorpus/pylex.hpp"
#include "typecorpus/records.hpp"

namespace typecorpus {

// Renders the source tokens of an annotation expression as a compact type
// string: token texts joined with a space only where two identifier-like
// tokens would otherwise merge, so "List[ int ]" becomes "List[int]".
std::string annotation_text(const std::vector<py::Token>& tokens, py::Span span);

// Verbatim source bytes covering a token span (empty span -> "").
std::string token_slice(std::string_view source, const std::vector<py::Token>& tokens,
                        py::Span span);

// Builds the structured per-file record from a parsed module: imports,
// module-level variables, classes, and functions, including docstring
// records and parameter occurrence windows. Token sequences and the split
// label are filled in by later stages.
ModuleRecord extract_module(const py::Module& module,
                            const std::vector<py::Token>& tokens,
                            std::string_view source);

}  // namespace typecorpus

#endif  // TYPECORPUS_EXTRACT_HPP_
