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

#ifndef TYPECORPUS_SOURCE_TEXT_HPP_
#define TYPECORPUS_SOURCE_TEXT_HPP_

#include <filesystem>
#include <string>
#include <string_view>

namespace typecorpus {

struct DecodedSource {
  bool ok = false;
  std::string text;      // UTF-8, line endings normalized to "\n"
  std::string encoding;  // encoding actually used
  std::string error;     // set when !ok
};

// Decodes raw file bytes the way the Python interpreter would: a UTF-8 BOM
// wins, then a PEP 263 coding cookie in the first two lines, then UTF-8.
// Supported cookies: utf-8, ascii, latin-1/iso-8859-1, cp1252/windows-1252.
// Undecodable input or an unsupported cookie yields ok=false.
DecodedSource decode_source(std::string_view bytes);

// Reads a file and decodes it. Throws IoError only when the file cannot be
// read at all; decode problems are reported through the result.
DecodedSource read_source_file(const std::filesystem::path& path);

std::string read_file_bytes(const std::filesystem::path& path);
void write_file_bytes(const std::filesystem::path& path, std::string_view bytes);

}  // namespace typecorpus

#endif  // TYPECORPUS_SOURCE_TEXT_HPP_
