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

#include "vraudit/zip_archive.hpp"

#include <algorithm>
#include <fstream>

#include <zlib.h>

namespace vraudit::apk {

namespace {

constexpr std::uint32_t kEocdSig = 0x06054b50;       // PK\x05\x06
constexpr std::uint32_t kCentralSig = 0x02014b50;    // PK\x01\x02
constexpr std::uint32_t kLocalSig = 0x04034b50;      // PK\x03\x04
constexpr std::size_t kEocdMinSize = 22;
constexpr std::size_t kEocdMaxSearch = kEocdMinSize + 0xFFFF; // max comment

constexpr std::uint16_t kMethodStored = 0;
constexpr std::uint16_t kMethodDeflate = 8;
constexpr std::uint16_t kFlagEncrypted = 0x0001;

std::uint32_t peek_u32(BytesView data, std::size_t at) {
    return static_cast<std::uint32_t>(data[at]) | (static_cast<std::uint32_t>(data[at + 1]) << 8) |
           (static_cast<std::uint32_t>(data[at + 2]) << 16) |
           (static_cast<std::uint32_t>(data[at + 3]) << 24);
}

} // namespace

std::uint32_t crc32_of(BytesView data) {
    return static_cast<std::uint32_t>(
            ::crc32(0L, reinterpret_cast<const Bytef*>(data.data()), static_cast<uInt>(data.size())));
}

Bytes inflate_raw(BytesView compressed, std::uint64_t expected_size, Errc error) {
    Bytes out(expected_size);
    z_stream zs{};
    if (inflateInit2(&zs, -MAX_WBITS) != Z_OK) raise(error, "inflate init failed");
    zs.next_in = const_cast<Bytef*>(reinterpret_cast<const Bytef*>(compressed.data()));
    zs.avail_in = static_cast<uInt>(compressed.size());
    zs.next_out = out.data();
    zs.avail_out = static_cast<uInt>(out.size());
    int rc = inflate(&zs, Z_FINISH);
    std::uint64_t produced = zs.total_out;
    inflateEnd(&zs);
    if (rc != Z_STREAM_END || produced != expected_size) {
        raise(error, "deflate stream corrupt or wrong length");
    }
    return out;
}

ApkPackage ApkPackage::open(const std::filesystem::path& file) {
    std::error_code ec;
    if (!std::filesystem::exists(file, ec) || ec) {
        raise(Errc::IoError, "cannot open " + file.string());
    }
    ApkPackage pkg;
    pkg.source_ = file.string();
    pkg.file_ = file;
    pkg.parse_central_directory();
    return pkg;
}

ApkPackage ApkPackage::from_bytes(Bytes data, std::string source) {
    ApkPackage pkg;
    pkg.source_ = std::move(source);
    pkg.buffer_ = std::make_shared<const Bytes>(std::move(data));
    pkg.parse_central_directory();
    return pkg;
}

bool ApkPackage::contains(std::string_view path) const {
    return entries_.find(std::string(path)) != entries_.end();
}

std::uint64_t ApkPackage::source_size() const {
    if (buffer_) return buffer_->size();
    std::error_code ec;
    auto size = std::filesystem::file_size(file_, ec);
    if (ec) raise(Errc::IoError, "stat failed for " + source_);
    return size;
}

Bytes ApkPackage::read_raw(std::uint64_t offset, std::uint64_t length) const {
    if (buffer_) {
        if (offset + length > buffer_->size()) {
            raise(Errc::TruncatedArchive, "read beyond end of " + source_);
        }
        return Bytes(buffer_->begin() + static_cast<std::ptrdiff_t>(offset),
                     buffer_->begin() + static_cast<std::ptrdiff_t>(offset + length));
    }
    std::ifstream in(file_, std::ios::binary);
    if (!in) raise(Errc::IoError, "cannot open " + source_);
    in.seekg(static_cast<std::streamoff>(offset));
    Bytes out(length);
    in.read(reinterpret_cast<char*>(out.data()), static_cast<std::streamsize>(length));
    if (static_cast<std::uint64_t>(in.gcount()) != length) {
        raise(Errc::TruncatedArchive, "read beyond end of " + source_);
    }
    return out;
}

void ApkPackage::parse_central_directory() {
    std::uint64_t total = source_size();
    if (total < kEocdMinSize) raise(Errc::NotAZip, source_ + " is too small to be a zip archive");

    std::uint64_t tail_len = std::min<std::uint64_t>(total, kEocdMaxSearch);
    Bytes tail = read_raw(total - tail_len, tail_len);

    // EOCD is the last record; search backwards so an archive comment that
    // happens to contain the magic does not fool us.
    std::size_t eocd_at = tail.size();
    for (std::size_t i = tail.size() - kEocdMinSize + 1; i-- > 0;) {
        if (peek_u32(tail, i) == kEocdSig) {
            eocd_at = i;
            break;
        }
    }
    if (eocd_at == tail.size()) {
        if (total >= 4 && peek_u32(read_raw(0, 4), 0) == kLocalSig) {
            raise(Errc::TruncatedArchive, source_ + " has local headers but no end-of-central-directory");
        }
        raise(Errc::NotAZip, source_ + " has no end-of-central-directory record");
    }

    ByteReader eocd(BytesView(tail).subspan(eocd_at), Errc::TruncatedArchive);
    eocd.skip(4);                      // signature
    eocd.skip(2 + 2 + 2);              // disk numbers, entries on this disk
    std::uint16_t entry_count = eocd.u16();
    std::uint32_t cd_size = eocd.u32();
    std::uint32_t cd_offset = eocd.u32();

    if (static_cast<std::uint64_t>(cd_offset) + cd_size > total) {
        raise(Errc::TruncatedArchive, "central directory extends past end of " + source_);
    }

    Bytes cd = read_raw(cd_offset, cd_size);
    ByteReader r(cd, Errc::TruncatedArchive);
    for (std::uint16_t i = 0; i < entry_count; ++i) {
        if (r.u32() != kCentralSig) {
            raise(Errc::TruncatedArchive, "bad central directory record in " + source_);
        }
        r.skip(2 + 2);                 // version made by / needed
        ZipEntry entry;
        entry.flags = r.u16();
        entry.method = r.u16();
        r.skip(2 + 2);                 // mod time / date
        entry.crc32 = r.u32();
        entry.compressed_size = r.u32();
        entry.uncompressed_size = r.u32();
        std::uint16_t name_len = r.u16();
        std::uint16_t extra_len = r.u16();
        std::uint16_t comment_len = r.u16();
        r.skip(2 + 2 + 4);             // disk start, internal attrs, external attrs
        entry.local_header_offset = r.u32();
        std::string name = r.ascii(name_len);
        r.skip(extra_len);
        r.skip(comment_len);
        // Later records win on duplicate paths; manifest-style archives treat
        // the directory as a map.
        entries_[name] = entry;
    }
}

Bytes ApkPackage::extract(std::string_view path) const {
    auto it = entries_.find(std::string(path));
    if (it == entries_.end()) {
        raise(Errc::EntryNotFound, std::string(path) + " not present in " + source_);
    }
    const ZipEntry& entry = it->second;
    if (entry.flags & kFlagEncrypted) {
        raise(Errc::UnsupportedCompression, "encrypted entry " + std::string(path));
    }
    if (entry.method != kMethodStored && entry.method != kMethodDeflate) {
        raise(Errc::UnsupportedCompression,
              "method " + std::to_string(entry.method) + " for " + std::string(path));
    }

    // The central directory's extra field length can differ from the local
    // header's; re-read it to find the payload start.
    Bytes local = read_raw(entry.local_header_offset, 30);
    ByteReader lh(local, Errc::TruncatedArchive);
    if (lh.u32() != kLocalSig) {
        raise(Errc::TruncatedArchive, "bad local header for " + std::string(path));
    }
    lh.skip(2 + 2 + 2 + 2 + 2 + 4 + 4 + 4); // version..sizes
    std::uint16_t name_len = lh.u16();
    std::uint16_t extra_len = lh.u16();
    std::uint64_t data_at = entry.local_header_offset + 30 + name_len + extra_len;

    Bytes raw = read_raw(data_at, entry.compressed_size);
    Bytes out;
    if (entry.method == kMethodStored) {
        if (entry.compressed_size != entry.uncompressed_size) {
            raise(Errc::CorruptEntry, "stored entry size mismatch for " + std::string(path));
        }
        out = std::move(raw);
    } else {
        out = inflate_raw(raw, entry.uncompressed_size, Errc::CorruptEntry);
    }
    if (crc32_of(out) != entry.crc32) {
        raise(Errc::CorruptEntry, "crc mismatch for " + std::string(path));
    }
    return out;
}

} // namespace vraudit::apk
