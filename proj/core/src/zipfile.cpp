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

#include "typecorpus/zipfile.hpp"

#include <zlib.h>

#include <algorithm>
#include <cstring>
#include <set>

#include "typecorpus/errors.hpp"
#include "typecorpus/source_text.hpp"

namespace typecorpus {
namespace {

// Fixed DOS timestamp (2026-01-01 00:00:00) so re-bundling identical inputs
// yields an identical archive.
constexpr std::uint16_t kDosTime = 0;
constexpr std::uint16_t kDosDate = ((2026 - 1980) << 9) | (1 << 5) | 1;

constexpr std::uint32_t kLocalHeaderSig = 0x04034b50;
constexpr std::uint32_t kCentralHeaderSig = 0x02014b50;
constexpr std::uint32_t kEndOfCentralSig = 0x06054b50;

constexpr std::uint16_t kMethodStored = 0;
constexpr std::uint16_t kMethodDeflated = 8;

void put16(std::string& out, std::uint16_t value) {
  out.push_back(static_cast<char>(value & 0xff));
  out.push_back(static_cast<char>((value >> 8) & 0xff));
}

void put32(std::string& out, std::uint32_t value) {
  out.push_back(static_cast<char>(value & 0xff));
  out.push_back(static_cast<char>((value >> 8) & 0xff));
  out.push_back(static_cast<char>((value >> 16) & 0xff));
  out.push_back(static_cast<char>((value >> 24) & 0xff));
}

std::uint16_t get16(const std::string& data, std::size_t offset) {
  return static_cast<std::uint16_t>(
      static_cast<unsigned char>(data[offset]) |
      (static_cast<unsigned char>(data[offset + 1]) << 8));
}

std::uint32_t get32(const std::string& data, std::size_t offset) {
  return static_cast<std::uint32_t>(static_cast<unsigned char>(data[offset])) |
         (static_cast<std::uint32_t>(static_cast<unsigned char>(data[offset + 1]))
          << 8) |
         (static_cast<std::uint32_t>(static_cast<unsigned char>(data[offset + 2]))
          << 16) |
         (static_cast<std::uint32_t>(static_cast<unsigned char>(data[offset + 3]))
          << 24);
}

std::uint32_t crc_of(const std::string& data) {
  return static_cast<std::uint32_t>(
      ::crc32(0L, reinterpret_cast<const Bytef*>(data.data()),
              static_cast<uInt>(data.size())));
}

// Raw deflate (no zlib wrapper) at a fixed level; ZIP stores the stream
// without the two-byte header.
std::string deflate_raw(const std::string& data) {
  z_stream stream{};
  if (deflateInit2(&stream, 6, Z_DEFLATED, -15, 8, Z_DEFAULT_STRATEGY) != Z_OK) {
    throw BundleError("deflate initialization failed");
  }
  std::string out;
  out.resize(deflateBound(&stream, static_cast<uLong>(data.size())));
  stream.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
  stream.avail_in = static_cast<uInt>(data.size());
  stream.next_out = reinterpret_cast<Bytef*>(out.data());
  stream.avail_out = static_cast<uInt>(out.size());
  const int rc = deflate(&stream, Z_FINISH);
  deflateEnd(&stream);
  if (rc != Z_STREAM_END) throw BundleError("deflate failed");
  out.resize(out.size() - stream.avail_out);
  return out;
}

std::string inflate_raw(const std::string& data, std::size_t expected_size) {
  z_stream stream{};
  if (inflateInit2(&stream, -15) != Z_OK) {
    throw BundleError("inflate initialization failed");
  }
  std::string out;
  out.resize(expected_size);
  stream.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
  stream.avail_in = static_cast<uInt>(data.size());
  stream.next_out = reinterpret_cast<Bytef*>(out.data());
  stream.avail_out = static_cast<uInt>(out.size());
  const int rc = inflate(&stream, Z_FINISH);
  inflateEnd(&stream);
  if (rc != Z_STREAM_END || stream.avail_out != 0) {
    throw BundleError("inflate failed: corrupt entry data");
  }
  return out;
}

struct CentralRecord {
  ZipEntryInfo info;
  std::uint32_t local_offset = 0;
};

std::vector<CentralRecord> read_central_directory(const std::string& file) {
  // The end-of-central-directory record is at least 22 bytes and sits at the
  // very end (no archive comment is ever written by this module).
  if (file.size() < 22) throw BundleError("archive too small");
  std::size_t eocd = std::string::npos;
  const std::size_t scan_start = file.size() >= 22 + 65535
                                     ? file.size() - 22 - 65535
                                     : 0;
  for (std::size_t pos = file.size() - 22 + 1; pos-- > scan_start;) {
    if (get32(file, pos) == kEndOfCentralSig) {
      eocd = pos;
      break;
    }
  }
  if (eocd == std::string::npos) {
    throw BundleError("missing end-of-central-directory record");
  }
  const std::uint16_t entry_count = get16(file, eocd + 10);
  std::size_t pos = get32(file, eocd + 16);

  std::vector<CentralRecord> records;
  records.reserve(entry_count);
  for (std::uint16_t i = 0; i < entry_count; ++i) {
    if (pos + 46 > file.size() || get32(file, pos) != kCentralHeaderSig) {
      throw BundleError("malformed central directory");
    }
    CentralRecord record;
    record.info.method = get16(file, pos + 10);
    record.info.crc = get32(file, pos + 16);
    record.info.compressed_size = get32(file, pos + 20);
    record.info.uncompressed_size = get32(file, pos + 24);
    const std::uint16_t name_len = get16(file, pos + 28);
    const std::uint16_t extra_len = get16(file, pos + 30);
    const std::uint16_t comment_len = get16(file, pos + 32);
    record.local_offset = get32(file, pos + 42);
    if (pos + 46 + name_len > file.size()) {
      throw BundleError("malformed central directory name");
    }
    record.info.name = file.substr(pos + 46, name_len);
    records.push_back(std::move(record));
    pos += 46u + name_len + extra_len + comment_len;
  }
  return records;
}

}  // namespace

void write_zip(const std::filesystem::path& path, std::vector<ZipEntry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const ZipEntry& a, const ZipEntry& b) { return a.name < b.name; });
  std::set<std::string> names;
  for (const ZipEntry& entry : entries) {
    if (entry.name.empty() || entry.name.front() == '/' ||
        entry.name.find('\\') != std::string::npos) {
      throw BundleError("invalid archive entry name: " + entry.name);
    }
    if (!names.insert(entry.name).second) {
      throw BundleError("duplicate archive entry name: " + entry.name);
    }
  }

  std::string file;
  std::string central;
  std::uint16_t count = 0;
  for (const ZipEntry& entry : entries) {
    const std::uint32_t crc = crc_of(entry.data);
    std::string compressed = deflate_raw(entry.data);
    std::uint16_t method = kMethodDeflated;
    if (compressed.size() >= entry.data.size()) {
      compressed = entry.data;
      method = kMethodStored;
    }
    const auto offset = static_cast<std::uint32_t>(file.size());

    put32(file, kLocalHeaderSig);
    put16(file, 20);  // version needed to extract
    put16(file, 0);   // general purpose flags
    put16(file, method);
    put16(file, kDosTime);
    put16(file, kDosDate);
    put32(file, crc);
    put32(file, static_cast<std::uint32_t>(compressed.size()));
    put32(file, static_cast<std::uint32_t>(entry.data.size()));
    put16(file, static_cast<std::uint16_t>(entry.name.size()));
    put16(file, 0);  // extra field length
    file += entry.name;
    file += compressed;

    put32(central, kCentralHeaderSig);
    put16(central, 20);  // version made by
    put16(central, 20);  // version needed
    put16(central, 0);
    put16(central, method);
    put16(central, kDosTime);
    put16(central, kDosDate);
    put32(central, crc);
    put32(central, static_cast<std::uint32_t>(compressed.size()));
    put32(central, static_cast<std::uint32_t>(entry.data.size()));
    put16(central, static_cast<std::uint16_t>(entry.name.size()));
    put16(central, 0);  // extra
    put16(central, 0);  // comment
    put16(central, 0);  // disk number
    put16(central, 0);  // internal attributes
    put32(central, 0);  // external attributes
    put32(central, offset);
    central += entry.name;
    ++count;
  }

  const auto central_offset = static_cast<std::uint32_t>(file.size());
  file += central;
  put32(file, kEndOfCentralSig);
  put16(file, 0);  // this disk
  put16(file, 0);  // central directory disk
  put16(file, count);
  put16(file, count);
  put32(file, static_cast<std::uint32_t>(central.size()));
  put32(file, central_offset);
  put16(file, 0);  // comment length

  write_file_bytes(path, file);
}

std::vector<ZipEntryInfo> list_zip_entries(const std::filesystem::path& path) {
  const std::string file = read_file_bytes(path);
  std::vector<ZipEntryInfo> infos;
  for (CentralRecord& record : read_central_directory(file)) {
    infos.push_back(std::move(record.info));
  }
  return infos;
}

std::string read_zip_entry(const std::filesystem::path& path,
                           const std::string& name) {
  const std::string file = read_file_bytes(path);
  for (const CentralRecord& record : read_central_directory(file)) {
    if (record.info.name != name) continue;
    const std::size_t pos = record.local_offset;
    if (pos + 30 > file.size() || get32(file, pos) != kLocalHeaderSig) {
      throw BundleError("malformed local header for entry: " + name);
    }
    const std::uint16_t name_len = get16(file, pos + 26);
    const std::uint16_t extra_len = get16(file, pos + 28);
    const std::size_t data_pos = pos + 30 + name_len + extra_len;
    if (data_pos + record.info.compressed_size > file.size()) {
      throw BundleError("truncated entry data: " + name);
    }
    const std::string raw = file.substr(data_pos, record.info.compressed_size);
    std::string data = record.info.method == kMethodStored
                           ? raw
                           : inflate_raw(raw, record.info.uncompressed_size);
    if (crc_of(data) != record.info.crc) {
      throw BundleError("checksum mismatch for entry: " + name);
    }
    return data;
  }
  throw BundleError("no such archive entry: " + name);
}

}  // namespace typecorpus
