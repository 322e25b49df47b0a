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

#include "typecorpus/pylex.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_set>

namespace typecorpus::py {
namespace {

const std::unordered_set<std::string_view> kKeywords = {
    "False",  "None",   "True",    "and",    "as",     "assert", "async",
    "await",  "break",  "class",   "continue", "def",  "del",    "elif",
    "else",   "except", "finally", "for",    "from",   "global", "if",
    "import", "in",     "is",      "lambda", "nonlocal", "not",  "or",
    "pass",   "raise",  "return",  "try",    "while",  "with",   "yield"};

constexpr std::array<std::string_view, 5> kOps3 = {"**=", "//=", ">>=", "<<=",
                                                   "..."};
constexpr std::array<std::string_view, 19> kOps2 = {
    "**", "//", ">>", "<<", "<=", ">=", "==", "!=", "->", "+=",
    "-=", "*=", "/=", "%=", "@=", "&=", "|=", "^=", ":="};
constexpr std::string_view kOps1 = "+-*/%@&|^~<>()[]{},:.;=";

bool ident_start(unsigned char c) {
  return c == '_' || std::isalpha(c) || c >= 0x80;
}
bool ident_cont(unsigned char c) {
  return c == '_' || std::isalnum(c) || c >= 0x80;
}
bool is_digit(unsigned char c) { return c >= '0' && c <= '9'; }

bool valid_string_prefix(std::string_view p) {
  if (p.size() > 2) return false;
  std::string low;
  for (char c : p) low.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  static const std::unordered_set<std::string_view> kPrefixes = {
      "", "r", "u", "b", "f", "br", "rb", "fr", "rf"};
  return kPrefixes.count(low) > 0;
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { indents_.push_back(0); }

  LexResult run() {
    while (!failed_ && pos_ <= src_.size()) {
      if (at_line_start_) {
        if (!handle_line_start()) break;
        continue;
      }
      if (pos_ >= src_.size()) break;
      scan_token();
    }
    if (failed_) {
      LexResult r;
      r.error = error_;
      r.error_line = error_line_;
      return r;
    }
    if (depth_ > 0) {
      return fail_result("unexpected end of file inside brackets");
    }
    finish();
    LexResult r;
    r.ok = true;
    r.tokens = std::move(tokens_);
    return r;
  }

 private:
  // Consumes indentation and emits Indent/Dedent. Returns false at EOF.
  bool handle_line_start() {
    std::size_t col = 0;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ' ') {
        ++col;
      } else if (c == '\t') {
        col = (col / 8 + 1) * 8;
      } else if (c == '\f') {
        col = 0;
      } else {
        break;
      }
      ++pos_;
    }
    if (pos_ >= src_.size()) return false;
    char c = src_[pos_];
    if (c == '\n') {  // blank line
      ++pos_;
      ++line_;
      return true;
    }
    if (c == '#') {  // comment-only line: no NEWLINE, no indent change
      scan_comment();
      if (pos_ < src_.size() && src_[pos_] == '\n') {
        ++pos_;
        ++line_;
      }
      return true;
    }
    if (col > indents_.back()) {
      indents_.push_back(col);
      emit_marker(TokenKind::Indent);
    } else {
      while (col < indents_.back()) {
        indents_.pop_back();
        emit_marker(TokenKind::Dedent);
      }
      if (col != indents_.back()) {
        fail("unindent does not match any outer indentation level");
        return false;
      }
    }
    at_line_start_ = false;
    return true;
  }

  void scan_token() {
    char c = src_[pos_];
    if (c == ' ' || c == '\t' || c == '\f') {
      ++pos_;
      return;
    }
    if (c == '\\') {
      if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '\n') {
        pos_ += 2;
        ++line_;
        return;
      }
      fail("unexpected character after line continuation character");
      return;
    }
    if (c == '\n') {
      if (depth_ > 0) {
        ++pos_;
        ++line_;
        return;
      }
      Token t;
      t.kind = TokenKind::Newline;
      t.begin = pos_;
      t.end = pos_ + 1;
      t.line = t.end_line = line_;
      tokens_.push_back(std::move(t));
      ++pos_;
      ++line_;
      at_line_start_ = true;
      return;
    }
    if (c == '#') {
      scan_comment();
      return;
    }
    if (ident_start(static_cast<unsigned char>(c))) {
      scan_name_or_prefixed_string();
      return;
    }
    if (is_digit(static_cast<unsigned char>(c)) ||
        (c == '.' && pos_ + 1 < src_.size() &&
         is_digit(static_cast<unsigned char>(src_[pos_ + 1])))) {
      scan_number();
      return;
    }
    if (c == '\'' || c == '"') {
      scan_string(pos_);
      return;
    }
    scan_operator();
  }

  void scan_comment() {
    std::size_t begin = pos_;
    while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
    emit(TokenKind::Comment, begin, pos_, line_);
  }

  void scan_name_or_prefixed_string() {
    std::size_t begin = pos_;
    while (pos_ < src_.size() &&
           ident_cont(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
    std::string_view word = src_.substr(begin, pos_ - begin);
    if (pos_ < src_.size() && (src_[pos_] == '\'' || src_[pos_] == '"') &&
        valid_string_prefix(word)) {
      scan_string(begin);
      return;
    }
    emit(kKeywords.count(word) ? TokenKind::Keyword : TokenKind::Name, begin,
         pos_, line_);
  }

  void scan_string(std::size_t begin) {
    std::size_t start_line = line_;
    char quote = src_[pos_];
    ++pos_;
    bool triple = false;
    if (pos_ + 1 <= src_.size() && pos_ < src_.size() && src_[pos_] == quote &&
        pos_ + 1 < src_.size() && src_[pos_ + 1] == quote) {
      triple = true;
      pos_ += 2;
    } else if (pos_ < src_.size() && src_[pos_] == quote) {
      // Empty short string.
      ++pos_;
      emit(TokenKind::String, begin, pos_, start_line);
      return;
    }
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\\') {
        if (pos_ + 1 >= src_.size()) break;
        if (src_[pos_ + 1] == '\n') ++line_;
        pos_ += 2;
        continue;
      }
      if (c == '\n') {
        if (!triple) {
          fail("end of line while scanning string literal");
          return;
        }
        ++line_;
        ++pos_;
        continue;
      }
      if (c == quote) {
        if (!triple) {
          ++pos_;
          emit(TokenKind::String, begin, pos_, start_line);
          return;
        }
        if (pos_ + 2 < src_.size() + 1 && pos_ + 1 < src_.size() &&
            src_[pos_ + 1] == quote && pos_ + 2 < src_.size() &&
            src_[pos_ + 2] == quote) {
          pos_ += 3;
          emit(TokenKind::String, begin, pos_, start_line);
          return;
        }
        ++pos_;
        continue;
      }
      ++pos_;
    }
    fail(triple ? "end of file in triple-quoted string"
                : "end of file while scanning string literal");
  }

  // Digit run with single underscores between digit groups.
  bool scan_digit_run(bool (*pred)(unsigned char), bool allow_leading_sep) {
    bool any = false;
    bool pending_sep = false;
    if (allow_leading_sep && pos_ < src_.size() && src_[pos_] == '_') {
      pending_sep = true;
      ++pos_;
    }
    while (pos_ < src_.size()) {
      unsigned char c = static_cast<unsigned char>(src_[pos_]);
      if (pred(c)) {
        any = true;
        pending_sep = false;
        ++pos_;
      } else if (c == '_' && any && !pending_sep) {
        pending_sep = true;
        ++pos_;
      } else {
        break;
      }
    }
    if (pending_sep) {
      fail("invalid underscore in numeric literal");
      return false;
    }
    return any;
  }

  void scan_number() {
    std::size_t begin = pos_;
    bool is_float = false;

    if (src_[pos_] == '.') {
      is_float = true;
      ++pos_;
      if (!scan_digit_run(is_digit, false)) {
        fail("invalid numeric literal");
        return;
      }
    } else if (src_[pos_] == '0' && pos_ + 1 < src_.size() &&
               (src_[pos_ + 1] == 'x' || src_[pos_ + 1] == 'X')) {
      pos_ += 2;
      if (!scan_digit_run(
              [](unsigned char c) { return std::isxdigit(c) != 0; }, true)) {
        if (!failed_) fail("invalid hexadecimal literal");
        return;
      }
      emit(TokenKind::Number, begin, pos_, line_);
      return;
    } else if (src_[pos_] == '0' && pos_ + 1 < src_.size() &&
               (src_[pos_ + 1] == 'o' || src_[pos_ + 1] == 'O')) {
      pos_ += 2;
      if (!scan_digit_run(
              [](unsigned char c) { return c >= '0' && c <= '7'; }, true)) {
        if (!failed_) fail("invalid octal literal");
        return;
      }
      emit(TokenKind::Number, begin, pos_, line_);
      return;
    } else if (src_[pos_] == '0' && pos_ + 1 < src_.size() &&
               (src_[pos_ + 1] == 'b' || src_[pos_ + 1] == 'B')) {
      pos_ += 2;
      if (!scan_digit_run(
              [](unsigned char c) { return c == '0' || c == '1'; }, true)) {
        if (!failed_) fail("invalid binary literal");
        return;
      }
      emit(TokenKind::Number, begin, pos_, line_);
      return;
    } else {
      if (!scan_digit_run(is_digit, false)) {
        fail("invalid numeric literal");
        return;
      }
      if (pos_ < src_.size() && src_[pos_] == '.') {
        is_float = true;
        ++pos_;
        // Fractional digits are optional ("1." is a float).
        if (pos_ < src_.size() &&
            is_digit(static_cast<unsigned char>(src_[pos_]))) {
          if (!scan_digit_run(is_digit, false)) return;
        }
      }
    }

    // Exponent.
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t mark = pos_;
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (pos_ < src_.size() && is_digit(static_cast<unsigned char>(src_[pos_]))) {
        if (!scan_digit_run(is_digit, false)) return;
        is_float = true;
      } else {
        pos_ = mark;  // "1e" is Number(1) followed by Name(e)
      }
    }

    bool imaginary = false;
    if (pos_ < src_.size() && (src_[pos_] == 'j' || src_[pos_] == 'J')) {
      imaginary = true;
      ++pos_;
    }

    if (!is_float && !imaginary) {
      std::string_view digits = src_.substr(begin, pos_ - begin);
      if (digits.size() > 1 && digits[0] == '0') {
        bool all_zero = std::all_of(digits.begin(), digits.end(), [](char c) {
          return c == '0' || c == '_';
        });
        if (!all_zero) {
          fail("leading zeros in decimal integer literal are not permitted");
          return;
        }
      }
    }
    emit(TokenKind::Number, begin, pos_, line_);
  }

  void scan_operator() {
    char c = src_[pos_];
    if (pos_ + 3 <= src_.size()) {
      std::string_view three = src_.substr(pos_, 3);
      if (std::find(kOps3.begin(), kOps3.end(), three) != kOps3.end()) {
        emit(TokenKind::Op, pos_, pos_ + 3, line_);
        pos_ += 3;
        return;
      }
    }
    if (pos_ + 2 <= src_.size()) {
      std::string_view two = src_.substr(pos_, 2);
      if (std::find(kOps2.begin(), kOps2.end(), two) != kOps2.end()) {
        emit(TokenKind::Op, pos_, pos_ + 2, line_);
        pos_ += 2;
        return;
      }
    }
    if (kOps1.find(c) != std::string_view::npos) {
      if (c == '(' || c == '[' || c == '{') {
        ++depth_;
      } else if (c == ')' || c == ']' || c == '}') {
        if (depth_ == 0) {
          fail(std::string("unmatched '") + c + "'");
          return;
        }
        --depth_;
      }
      emit(TokenKind::Op, pos_, pos_ + 1, line_);
      ++pos_;
      return;
    }
    fail(std::string("invalid character '") + c + "' in source");
  }

  void finish() {
    if (!tokens_.empty() && !at_line_start_) {
      bool needs_newline = true;
      for (auto it = tokens_.rbegin(); it != tokens_.rend(); ++it) {
        if (it->kind == TokenKind::Comment) continue;
        needs_newline = it->kind != TokenKind::Newline &&
                        it->kind != TokenKind::Indent &&
                        it->kind != TokenKind::Dedent;
        break;
      }
      if (needs_newline) {
        Token t;
        t.kind = TokenKind::Newline;
        t.begin = t.end = src_.size();
        t.line = t.end_line = line_;
        tokens_.push_back(std::move(t));
      }
    }
    while (indents_.size() > 1) {
      indents_.pop_back();
      emit_marker(TokenKind::Dedent);
    }
    Token eof;
    eof.kind = TokenKind::EndOfFile;
    eof.begin = eof.end = src_.size();
    eof.line = eof.end_line = line_;
    tokens_.push_back(std::move(eof));
  }

  void emit(TokenKind kind, std::size_t begin, std::size_t end,
            std::size_t start_line) {
    Token t;
    t.kind = kind;
    t.text.assign(src_.substr(begin, end - begin));
    t.begin = begin;
    t.end = end;
    t.line = start_line;
    t.end_line = line_;
    tokens_.push_back(std::move(t));
  }

  void emit_marker(TokenKind kind) {
    Token t;
    t.kind = kind;
    t.begin = t.end = pos_;
    t.line = t.end_line = line_;
    tokens_.push_back(std::move(t));
  }

  void fail(std::string message) {
    if (failed_) return;
    failed_ = true;
    error_ = std::move(message);
    error_line_ = line_;
  }

  LexResult fail_result(std::string message) {
    LexResult r;
    r.error = std::move(message);
    r.error_line = line_;
    return r;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t depth_ = 0;
  bool at_line_start_ = true;
  bool failed_ = false;
  std::string error_;
  std::size_t error_line_ = 0;
  std::vector<std::size_t> indents_;
  std::vector<Token> tokens_;
};

}  // namespace

LexResult lex(std::string_view source) { return Lexer(source).run(); }

bool is_python_keyword(std::string_view word) {
  return kKeywords.count(word) > 0;
}

StringFlags string_token_flags(std::string_view text) {
  StringFlags flags;
  std::size_t i = 0;
  while (i < text.size() && text[i] != '\'' && text[i] != '"') {
    char c = static_cast<char>(std::tolower(static_cast<unsigned char>(text[i])));
    if (c == 'r') flags.raw = true;
    if (c == 'b') flags.bytes = true;
    if (c == 'f') flags.fstring = true;
    ++i;
  }
  flags.prefix_len = i;
  if (i + 2 < text.size() && text[i + 1] == text[i] && text[i + 2] == text[i]) {
    flags.quote_len = 3;
  }
  return flags;
}

namespace {

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

}  // namespace

std::string decode_string_token(std::string_view text) {
  StringFlags flags = string_token_flags(text);
  std::size_t body_begin = flags.prefix_len + flags.quote_len;
  if (text.size() < body_begin + flags.quote_len) return "";
  std::string_view body =
      text.substr(body_begin, text.size() - body_begin - flags.quote_len);
  if (flags.raw) return std::string(body);

  std::string out;
  out.reserve(body.size());
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] != '\\' || i + 1 >= body.size()) {
      out.push_back(body[i]);
      continue;
    }
    char e = body[i + 1];
    switch (e) {
      case 'n': out.push_back('\n'); ++i; break;
      case 't': out.push_back('\t'); ++i; break;
      case 'r': out.push_back('\r'); ++i; break;
      case 'a': out.push_back('\a'); ++i; break;
      case 'b': out.push_back('\b'); ++i; break;
      case 'f': out.push_back('\f'); ++i; break;
      case 'v': out.push_back('\v'); ++i; break;
      case '\\': out.push_back('\\'); ++i; break;
      case '\'': out.push_back('\''); ++i; break;
      case '"': out.push_back('"'); ++i; break;
      case '\n': ++i; break;  // line continuation
      case 'x': {
        if (i + 3 < body.size() && std::isxdigit(static_cast<unsigned char>(body[i + 2])) &&
            std::isxdigit(static_cast<unsigned char>(body[i + 3]))) {
          int value = std::stoi(std::string(body.substr(i + 2, 2)), nullptr, 16);
          out.push_back(static_cast<char>(value));
          i += 3;
        } else {
          out.push_back('\\');
        }
        break;
      }
      case 'u':
      case 'U': {
        const std::size_t digits = e == 'u' ? 4 : 8;
        std::uint32_t value = 0;
        std::size_t k = i + 2;
        bool valid = k + digits <= body.size();
        for (std::size_t d = 0; valid && d < digits; ++d) {
          const auto c = static_cast<unsigned char>(body[k + d]);
          if (!std::isxdigit(c)) {
            valid = false;
          } else {
            value = value * 16 + static_cast<std::uint32_t>(
                                     std::isdigit(c) ? c - '0'
                                                     : std::tolower(c) - 'a' + 10);
          }
        }
        if (valid && value <= 0x10FFFF) {
          append_utf8(out, value);
          i = k + digits - 1;
        } else {
          out.push_back('\\');
        }
        break;
      }
      default: {
        if (e >= '0' && e <= '7') {
          int value = 0;
          std::size_t k = i + 1;
          while (k < body.size() && k <= i + 3 && body[k] >= '0' && body[k] <= '7') {
            value = value * 8 + (body[k] - '0');
            ++k;
          }
          out.push_back(static_cast<char>(value));
          i = k - 1;
        } else {
          // \N{...} names and malformed escapes are kept verbatim; their
          // expansion never matters for docstring prose.
          out.push_back('\\');
        }
        break;
      }
    }
  }
  return out;
}

}  // namespace typecorpus::py
