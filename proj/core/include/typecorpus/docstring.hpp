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

#ifndef TYPECORPUS_DOCSTRING_HPP_
#define TYPECORPUS_DOCSTRING_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "typecorpus/records.hpp"

namespace typecorpus {

enum class DocstringFormat { None, Google, Rest, Numpy, Plain };

// Detects the section format by its markers: "Args:"/"Returns:" (Google),
// ":param"/":returns:" (reST), "Parameters" over a dashed rule (NumPy).
DocstringFormat detect_docstring_format(std::string_view raw);

// Splits a docstring into the three schema fields. `func` is the first
// line, `ret` the text of the returns section when one exists, and
// `long_descr` everything else with line structure preserved (parameter
// sections stay inside long_descr so they remain recoverable).
DocstringRecord parse_docstring(std::string_view raw);

// Names documented as parameters in any of the three formats, in order of
// appearance. Works on a raw docstring or on func + "\n" + long_descr.
std::vector<std::string> documented_param_names(std::string_view text);

}  // namespace typecorpus

#endif  // TYPECORPUS_DOCSTRING_HPP_
