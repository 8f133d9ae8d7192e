/*
 * Copyright (C) 2026 The vraudit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "vraudit/bytes.hpp"

namespace vraudit::apk {

/// One central-directory record. Only stored (0) and deflate (8) methods are
/// supported; anything else raises UnsupportedCompression at extraction time.
struct ZipEntry {
    std::uint64_t uncompressed_size = 0;
    std::uint64_t compressed_size = 0;
    std::uint16_t method = 0;
    std::uint16_t flags = 0;
    std::uint32_t crc32 = 0;
    std::uint64_t local_header_offset = 0;
};

/// An opened .apk (zip) container. Construction parses the end-of-central-
/// directory record and the central directory only; entry payloads are read
/// lazily by extract(). Immutable after open, safe for concurrent readers.
class ApkPackage {
public:
    static ApkPackage open(const std::filesystem::path& file);
    static ApkPackage from_bytes(Bytes data, std::string source = "<memory>");

    const std::string& source() const { return source_; }
    const std::map<std::string, ZipEntry>& entries() const { return entries_; }
    bool contains(std::string_view path) const;

    /// Fully decompressed payload of one entry, CRC-verified.
    Bytes extract(std::string_view path) const;

private:
    ApkPackage() = default;
    void parse_central_directory();
    Bytes read_raw(std::uint64_t offset, std::uint64_t length) const;
    std::uint64_t source_size() const;

    std::string source_;
    std::filesystem::path file_;                   // empty when memory-backed
    std::shared_ptr<const Bytes> buffer_;          // null when file-backed
    std::map<std::string, ZipEntry> entries_;
};

/// Raw-deflate inflate with an expected output size, shared with the pak and
/// obb readers. Throws `error` on corrupt streams.
Bytes inflate_raw(BytesView compressed, std::uint64_t expected_size, Errc error);

std::uint32_t crc32_of(BytesView data);

} // namespace vraudit::apk
