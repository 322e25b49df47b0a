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

#include "typecorpus/source_text.hpp"

#include <array>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "typecorpus/errors.hpp"

namespace typecorpus {
namespace {

bool valid_utf8(std::string_view bytes) {
  std::size_t i = 0;
  while (i < bytes.size()) {
    unsigned char c = static_cast<unsigned char>(bytes[i]);
    std::size_t extra;
    std::uint32_t min_cp;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      extra = 1;
      min_cp = 0x80;
    } else if ((c & 0xF0) == 0xE0) {
      extra = 2;
      min_cp = 0x800;
    } else if ((c & 0xF8) == 0xF0) {
      extra = 3;
      min_cp = 0x10000;
    } else {
      return false;
    }
    if (i + extra >= bytes.size()) return false;
    std::uint32_t cp = c & (0x3F >> extra);
    for (std::size_t k = 1; k <= extra; ++k) {
      unsigned char cc = static_cast<unsigned char>(bytes[i + k]);
      if ((cc & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3F);
    }
    if (cp < min_cp || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      return false;
    }
    i += extra + 1;
  }
  return true;
}

void append_codepoint(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

// cp1252 codepoints for bytes 0x80..0x9F; 0 marks undefined bytes.
constexpr std::array<std::uint16_t, 32> kCp1252High = {
    0x20AC, 0,      0x201A, 0x0192, 0x201E, 0x2026, 0x2020, 0x2021,
    0x02C6, 0x2030, 0x0160, 0x2039, 0x0152, 0,      0x017D, 0,
    0,      0x2018, 0x2019, 0x201C, 0x201D, 0x2022, 0x2013, 0x2014,
    0x02DC, 0x2122, 0x0161, 0x203A, 0x0153, 0,      0x017E, 0x0178};

std::string canonical_encoding(std::string name) {
  for (auto& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (auto& c : name) {
    if (c == '_') c = '-';
  }
  if (name == "utf-8" || name == "utf8" || name == "u8") return "utf-8";
  if (name == "ascii" || name == "us-ascii" || name == "646") return "ascii";
  if (name == "latin-1" || name == "latin1" || name == "iso-8859-1" ||
      name == "iso8859-1" || name == "8859" || name == "l1") {
    return "latin-1";
  }
  if (name == "cp1252" || name == "windows-1252") return "cp1252";
  return name;
}

// PEP 263: the cookie must appear in a comment on line 1 or 2.
std::string find_coding_cookie(std::string_view bytes) {
  std::size_t pos = 0;
  for (int line = 0; line < 2 && pos < bytes.size(); ++line) {
    std::size_t eol = bytes.find('\n', pos);
    std::string_view text = bytes.substr(
        pos, eol == std::string_view::npos ? bytes.size() - pos : eol - pos);
    auto hash = text.find('#');
    if (hash != std::string_view::npos) {
      auto comment = text.substr(hash);
      auto coding = comment.find("coding");
      if (coding != std::string_view::npos) {
        std::size_t i = coding + 6;
        if (i < comment.size() && (comment[i] == ':' || comment[i] == '=')) {
          ++i;
          while (i < comment.size() && (comment[i] == ' ' || comment[i] == '\t')) ++i;
          std::size_t start = i;
          while (i < comment.size() &&
                 (std::isalnum(static_cast<unsigned char>(comment[i])) ||
                  comment[i] == '-' || comment[i] == '_' || comment[i] == '.')) {
            ++i;
          }
          if (i > start) return std::string(comment.substr(start, i - start));
        }
      }
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return "";
}

std::string normalize_newlines(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\r') {
      out.push_back('\n');
      if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
    } else {
      out.push_back(text[i]);
    }
  }
  return out;
}

}  // namespace

DecodedSource decode_source(std::string_view bytes) {
  DecodedSource result;

  bool had_bom = false;
  if (bytes.size() >= 3 && static_cast<unsigned char>(bytes[0]) == 0xEF &&
      static_cast<unsigned char>(bytes[1]) == 0xBB &&
      static_cast<unsigned char>(bytes[2]) == 0xBF) {
    bytes.remove_prefix(3);
    had_bom = true;
  }
  if (bytes.find('\0') != std::string_view::npos) {
    result.error = "source contains null bytes";
    return result;
  }

  std::string encoding =
      had_bom ? "utf-8" : canonical_encoding(find_coding_cookie(bytes));
  if (encoding.empty()) encoding = "utf-8";

  if (encoding == "utf-8" || encoding == "ascii") {
    if (encoding == "ascii") {
      for (char c : bytes) {
        if (static_cast<unsigned char>(c) >= 0x80) {
          result.error = "non-ASCII byte in ascii-coded source";
          return result;
        }
      }
    } else if (!valid_utf8(bytes)) {
      result.error = "invalid UTF-8";
      return result;
    }
    result.text = normalize_newlines(bytes);
  } else if (encoding == "latin-1") {
    std::string utf8;
    utf8.reserve(bytes.size());
    for (char c : bytes) append_codepoint(utf8, static_cast<unsigned char>(c));
    result.text = normalize_newlines(utf8);
  } else if (encoding == "cp1252") {
    std::string utf8;
    utf8.reserve(bytes.size());
    for (char c : bytes) {
      unsigned char b = static_cast<unsigned char>(c);
      if (b >= 0x80 && b <= 0x9F) {
        std::uint16_t cp = kCp1252High[b - 0x80];
        if (cp == 0) {
          result.error = "undefined cp1252 byte";
          return result;
        }
        append_codepoint(utf8, cp);
      } else {
        append_codepoint(utf8, b);
      }
    }
    result.text = normalize_newlines(utf8);
  } else {
    result.error = "unsupported source encoding \"" + encoding + "\"";
    return result;
  }

  result.ok = true;
  result.encoding = encoding;
  return result;
}

DecodedSource read_source_file(const std::filesystem::path& path) {
  return decode_source(read_file_bytes(path));
}

std::string read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

void write_file_bytes(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("short write to " + path.string());
}

}  // namespace typecorpus
