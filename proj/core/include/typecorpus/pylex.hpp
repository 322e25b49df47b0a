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

#ifndef TYPECORPUS_PYLEX_HPP_
#define TYPECORPUS_PYLEX_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace typecorpus::py {

enum class TokenKind {
  Name,
  Keyword,
  Number,
  String,
  Op,
  Newline,  // end of a logical line
  Indent,
  Dedent,
  Comment,
  EndOfFile,
};

struct Token {
  TokenKind kind = TokenKind::EndOfFile;
  std::string text;       // source slice ("" for Indent/Dedent/EndOfFile)
  std::size_t begin = 0;  // byte offsets into the decoded source
  std::size_t end = 0;
  std::size_t line = 0;      // 1-based start line
  std::size_t end_line = 0;  // differs from line for triple-quoted strings

  bool is(TokenKind k) const { return kind == k; }
  bool is_op(std::string_view op) const {
    return kind == TokenKind::Op && text == op;
  }
  bool is_keyword(std::string_view kw) const {
    return kind == TokenKind::Keyword && text == kw;
  }
};

struct LexResult {
  bool ok = false;
  std::vector<Token> tokens;  // ends with EndOfFile on success
  std::string error;
  std::size_t error_line = 0;
};

// Tokenizes Python 3 source (UTF-8, "\n" line endings). Follows the CPython
// tokenizer: INDENT/DEDENT from leading whitespace (tab = next multiple of
// 8), NEWLINE only at bracket depth zero, explicit backslash continuation,
// string prefixes r/b/u/f in any combination and case, numeric literals with
// underscores. Python 2 holdovers (leading-zero octals, backticks) fail here.
LexResult lex(std::string_view source);

bool is_python_keyword(std::string_view word);

struct StringFlags {
  bool raw = false;
  bool bytes = false;
  bool fstring = false;
  std::size_t prefix_len = 0;
  std::size_t quote_len = 1;  // 1 or 3
};

StringFlags string_token_flags(std::string_view token_text);

// Cooked value of a string token: prefix and quotes stripped, escapes
// processed unless raw. Good enough for docstrings; \N{...} names are kept
// verbatim.
std::string decode_string_token(std::string_view token_text);

}  // namespace typecorpus::py

#endif  // TYPECORPUS_PYLEX_HPP_
