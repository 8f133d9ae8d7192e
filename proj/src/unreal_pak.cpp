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

#include "vraudit/unreal_pak.hpp"

#include "vraudit/zip_archive.hpp"

namespace vraudit::unreal {

namespace {

std::string read_pak_string(ByteReader& r) {
    std::uint32_t len = r.u32();
    if (len == 0) return {};
    std::string s = r.ascii(len);
    if (!s.empty() && s.back() == '\0') s.pop_back();
    return s;
}

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

} // namespace

PakIndex parse_pak_index(BytesView data) {
    if (data.size() < kPakFooterSize) raise(Errc::BadFooterMagic, "file smaller than pak footer");
    ByteReader f(data.subspan(data.size() - kPakFooterSize), Errc::IndexOutOfBounds);
    std::uint8_t encrypted = f.u8();
    std::uint32_t magic = f.u32();
    std::uint32_t version = f.u32();
    std::uint64_t index_offset = f.u64();
    std::uint64_t index_size = f.u64();

    if (magic != kPakMagic) raise(Errc::BadFooterMagic, "pak footer magic mismatch");
    if (encrypted != 0) raise(Errc::EncryptedIndexUnsupported, "encrypted pak index");
    if (version < kPakMinVersion || version > kPakMaxVersion) {
        raise(Errc::UnsupportedPakVersion, "pak version " + std::to_string(version));
    }
    if (index_offset + index_size > data.size() - kPakFooterSize) {
        raise(Errc::IndexOutOfBounds, "index region outside pak");
    }

    PakIndex index;
    index.version = version;
    ByteReader r(data.subspan(index_offset, index_size), Errc::IndexOutOfBounds);
    index.mount_point = read_pak_string(r);
    std::uint32_t count = r.u32();
    for (std::uint32_t i = 0; i < count; ++i) {
        std::string path = read_pak_string(r);
        PakIndex::Entry entry;
        entry.offset = r.u64();
        entry.size = r.u64();
        entry.compression_flag = r.u32();
        if (entry.offset + entry.size > data.size() - kPakFooterSize) {
            raise(Errc::IndexOutOfBounds, "entry " + path + " outside pak");
        }
        index.entries[path] = entry;
    }
    return index;
}

Bytes read_pak_entry(BytesView pak, const PakIndex& index, const std::string& path) {
    auto it = index.entries.find(path);
    if (it == index.entries.end()) raise(Errc::EntryNotFound, path + " not in pak index");
    const auto& entry = it->second;
    if (entry.compression_flag != 0) {
        raise(Errc::CompressedEntryUnsupported, path + " is compressed");
    }
    BytesView payload = pak.subspan(entry.offset, entry.size);
    return Bytes(payload.begin(), payload.end());
}

Bytes unwrap_obb(BytesView data) {
    auto pkg = apk::ApkPackage::from_bytes(Bytes(data.begin(), data.end()), "<obb>");
    std::string pak_path;
    for (const auto& [path, entry] : pkg.entries()) {
        if (ends_with(path, ".pak")) {
            if (!pak_path.empty()) raise(Errc::MultiplePakEntries, pak_path + " and " + path);
            pak_path = path;
        }
    }
    if (pak_path.empty()) raise(Errc::NoPakEntry, "no .pak entry in obb");
    return pkg.extract(pak_path);
}

} // namespace vraudit::unreal
