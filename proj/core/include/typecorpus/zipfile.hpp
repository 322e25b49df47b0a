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

#ifndef TYPECORPUS_ZIPFILE_HPP_
#define TYPECORPUS_ZIPFILE_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace typecorpus {

struct ZipEntry {
  std::string name;  // forward-slash separated archive path
  std::string data;
};

struct ZipEntryInfo {
  std::string name;
  std::uint32_t crc = 0;
  std::uint32_t compressed_size = 0;
  std::uint32_t uncompressed_size = 0;
  std::uint16_t method = 0;  // 0 = stored, 8 = deflated
};

// Writes a byte-deterministic archive: entries sorted by name, fixed
// timestamps, fixed deflate settings (falling back to stored data when
// deflate does not shrink an entry). Throws BundleError on duplicate or
// invalid entry names and IoError on write failure.
void write_zip(const std::filesystem::path& path, std::vector<ZipEntry> entries);

// Central-directory listing in directory order. Throws BundleError on a
// malformed archive.
std::vector<ZipEntryInfo> list_zip_entries(const std::filesystem::path& path);

// Extracts one entry's bytes; throws BundleError when absent or corrupt.
std::string read_zip_entry(const std::filesystem::path& path,
                           const std::string& name);

}  // namespace typecorpus

#endif  // TYPECORPUS_ZIPFILE_HPP_
