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

#include "typecorpus/docstring.hpp"

#include <algorithm>
#include <cctype>

namespace typecorpus {
namespace {

std::string strip(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::size_t indent_of(std::string_view line) {
  std::size_t i = 0;
  while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
  return i;
}

bool is_blank(std::string_view line) {
  return indent_of(line) == line.size();
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\n') {
      std::string line(text.substr(start, i - start));
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(std::move(line));
      start = i + 1;
    }
  }
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

// inspect.cleandoc-style normalization: leading whitespace of the first
// line dropped, common indentation of the rest removed, outer blank lines
// trimmed.
std::vector<std::string> clean_lines(std::string_view raw) {
  std::vector<std::string> lines = split_lines(raw);
  if (lines.empty()) return lines;
  std::size_t common = std::string::npos;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (is_blank(lines[i])) continue;
    common = std::min(common, indent_of(lines[i]));
  }
  std::string first = lines[0];
  lines[0] = first.substr(indent_of(first));
  if (common != std::string::npos) {
    for (std::size_t i = 1; i < lines.size(); ++i) {
      lines[i] = lines[i].size() > common ? lines[i].substr(common) : "";
    }
  }
  for (auto& line : lines) {
    while (!line.empty() &&
           std::isspace(static_cast<unsigned char>(line.back()))) {
      line.pop_back();
    }
  }
  while (!lines.empty() && lines.front().empty()) lines.erase(lines.begin());
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

bool is_dashes(std::string_view line) {
  std::string s = strip(line);
  return s.size() >= 3 && s.find_first_not_of('-') == std::string::npos;
}

const std::vector<std::string> kGoogleHeaders = {
    "Args:",    "Arguments:", "Params:",  "Parameters:", "Returns:",
    "Yields:",  "Raises:",    "Attributes:", "Note:",    "Notes:",
    "Example:", "Examples:"};

const std::vector<std::string> kNumpyHeaders = {
    "Parameters", "Returns", "Yields", "Raises",
    "Attributes", "See Also", "Notes",  "Examples", "Other Parameters"};

bool is_google_header(const std::string& stripped) {
  return std::find(kGoogleHeaders.begin(), kGoogleHeaders.end(), stripped) !=
         kGoogleHeaders.end();
}

bool is_numpy_header(const std::vector<std::string>& lines, std::size_t i) {
  if (i + 1 >= lines.size()) return false;
  const std::string stripped = strip(lines[i]);
  return std::find(kNumpyHeaders.begin(), kNumpyHeaders.end(), stripped) !=
             kNumpyHeaders.end() &&
         is_dashes(lines[i + 1]);
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

std::string join_stripped(const std::vector<std::string>& lines,
                          std::size_t begin, std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end; ++i) {
    std::string s = strip(lines[i]);
    if (s.empty()) continue;
    if (!out.empty()) out += ' ';
    out += s;
  }
  return out;
}

}  // namespace

DocstringFormat detect_docstring_format(std::string_view raw) {
  std::vector<std::string> lines = clean_lines(raw);
  if (lines.empty()) return DocstringFormat::None;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string stripped = strip(lines[i]);
    if (starts_with(stripped, ":param") || starts_with(stripped, ":returns:") ||
        starts_with(stripped, ":return:") || starts_with(stripped, ":rtype:")) {
      return DocstringFormat::Rest;
    }
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (is_numpy_header(lines, i)) return DocstringFormat::Numpy;
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (is_google_header(strip(lines[i]))) return DocstringFormat::Google;
  }
  return DocstringFormat::Plain;
}

DocstringRecord parse_docstring(std::string_view raw) {
  DocstringRecord record;
  std::vector<std::string> lines = clean_lines(raw);
  if (lines.empty()) return record;
  record.func = strip(lines[0]);

  const DocstringFormat format = detect_docstring_format(raw);
  std::vector<bool> consumed(lines.size(), false);
  consumed[0] = true;

  if (format == DocstringFormat::Google) {
    for (std::size_t i = 1; i < lines.size(); ++i) {
      if (strip(lines[i]) != "Returns:") continue;
      const std::size_t header_indent = indent_of(lines[i]);
      consumed[i] = true;
      std::size_t j = i + 1;
      std::size_t last_content = i;
      while (j < lines.size()) {
        if (is_blank(lines[j])) {
          // Blank lines belong to the section only when deeper content follows.
          std::size_t probe = j;
          while (probe < lines.size() && is_blank(lines[probe])) ++probe;
          if (probe == lines.size() || indent_of(lines[probe]) <= header_indent) {
            break;
          }
          ++j;
          continue;
        }
        if (indent_of(lines[j]) <= header_indent) break;
        last_content = j;
        ++j;
      }
      record.ret = join_stripped(lines, i + 1, last_content + 1);
      for (std::size_t k = i + 1; k <= last_content; ++k) consumed[k] = true;
      break;
    }
  } else if (format == DocstringFormat::Rest) {
    for (std::size_t i = 1; i < lines.size(); ++i) {
      std::string stripped = strip(lines[i]);
      std::string_view marker;
      if (starts_with(stripped, ":returns:")) {
        marker = ":returns:";
      } else if (starts_with(stripped, ":return:")) {
        marker = ":return:";
      } else {
        continue;
      }
      std::string text = strip(stripped.substr(marker.size()));
      consumed[i] = true;
      const std::size_t field_indent = indent_of(lines[i]);
      std::size_t j = i + 1;
      while (j < lines.size() && !is_blank(lines[j]) &&
             indent_of(lines[j]) > field_indent &&
             strip(lines[j])[0] != ':') {
        if (!text.empty()) text += ' ';
        text += strip(lines[j]);
        consumed[j] = true;
        ++j;
      }
      record.ret = text;
      break;
    }
  } else if (format == DocstringFormat::Numpy) {
    for (std::size_t i = 1; i < lines.size(); ++i) {
      if (!is_numpy_header(lines, i) || strip(lines[i]) != "Returns") continue;
      consumed[i] = true;
      consumed[i + 1] = true;
      std::size_t j = i + 2;
      std::size_t last_content = i + 1;
      while (j < lines.size() && !is_numpy_header(lines, j)) {
        if (!is_blank(lines[j])) last_content = j;
        ++j;
      }
      record.ret = join_stripped(lines, i + 2, last_content + 1);
      for (std::size_t k = i + 2; k <= last_content; ++k) consumed[k] = true;
      break;
    }
  }

  std::vector<std::string> remainder;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (!consumed[i]) remainder.push_back(lines[i]);
  }
  while (!remainder.empty() && remainder.front().empty()) {
    remainder.erase(remainder.begin());
  }
  while (!remainder.empty() && remainder.back().empty()) remainder.pop_back();
  for (std::size_t i = 0; i < remainder.size(); ++i) {
    if (i) record.long_descr += '\n';
    record.long_descr += remainder[i];
  }
  return record;
}

namespace {

bool ident_start(char c) {
  return c == '_' || std::isalpha(static_cast<unsigned char>(c));
}

std::string leading_identifier(std::string_view s) {
  if (s.empty() || !ident_start(s[0])) return "";
  std::size_t i = 1;
  while (i < s.size() &&
         (s[i] == '_' || std::isalnum(static_cast<unsigned char>(s[i])))) {
    ++i;
  }
  return std::string(s.substr(0, i));
}

void add_unique(std::vector<std::string>& out, const std::string& name) {
  if (name.empty()) return;
  if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
}

}  // namespace

std::vector<std::string> documented_param_names(std::string_view text) {
  std::vector<std::string> names;
  std::vector<std::string> lines = clean_lines(text);

  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string stripped = strip(lines[i]);

    // reST field lists: ":param name:" or ":param type name:".
    if (starts_with(stripped, ":param")) {
      std::size_t colon = stripped.find(':', 1);
      if (colon == std::string::npos) continue;
      std::string head = stripped.substr(6, colon - 6);  // after ":param"
      std::string last;
      std::string word;
      for (char c : head + " ") {
        if (std::isspace(static_cast<unsigned char>(c))) {
          if (!word.empty()) last = word;
          word.clear();
        } else {
          word += c;
        }
      }
      add_unique(names, leading_identifier(last));
      continue;
    }

    // Google sections: items are "name: ..." or "name (type): ..." one
    // indent level below the header.
    if (stripped == "Args:" || stripped == "Arguments:" ||
        stripped == "Params:" || stripped == "Parameters:") {
      const std::size_t header_indent = indent_of(lines[i]);
      std::size_t item_indent = std::string::npos;
      for (std::size_t j = i + 1; j < lines.size(); ++j) {
        if (is_blank(lines[j])) break;
        const std::size_t ind = indent_of(lines[j]);
        if (ind <= header_indent) break;
        if (item_indent == std::string::npos) item_indent = ind;
        if (ind != item_indent) continue;  // description continuation
        std::string item = strip(lines[j]);
        std::string name = leading_identifier(item);
        std::size_t after = name.size();
        while (after < item.size() &&
               std::isspace(static_cast<unsigned char>(item[after]))) {
          ++after;
        }
        if (after < item.size() && (item[after] == ':' || item[after] == '(')) {
          add_unique(names, name);
        }
      }
      continue;
    }

    // NumPy "Parameters" over a dashed rule: items sit at the section base
    // indent as "name : type", "name:", or comma-separated name lists.
    if ((stripped == "Parameters" || stripped == "Other Parameters") &&
        i + 1 < lines.size() && is_dashes(lines[i + 1])) {
      std::size_t base_indent = std::string::npos;
      for (std::size_t j = i + 2; j < lines.size(); ++j) {
        if (is_blank(lines[j])) break;
        if (is_numpy_header(lines, j)) break;
        const std::size_t ind = indent_of(lines[j]);
        if (base_indent == std::string::npos) base_indent = ind;
        if (ind != base_indent) continue;
        std::string item = strip(lines[j]);
        std::size_t colon = item.find(':');
        std::string head = colon == std::string::npos ? item
                                                      : item.substr(0, colon);
        std::size_t start = 0;
        while (start <= head.size()) {
          std::size_t comma = head.find(',', start);
          std::string piece = strip(head.substr(
              start, comma == std::string::npos ? std::string::npos
                                                : comma - start));
          std::string name = leading_identifier(piece);
          if (!name.empty() && name.size() == piece.size()) {
            add_unique(names, name);
          }
          if (comma == std::string::npos) break;
          start = comma + 1;
        }
      }
    }
  }
  return names;
}

}  // namespace typecorpus
