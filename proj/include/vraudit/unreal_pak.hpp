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
#include <map>
#include <string>

#include "vraudit/bytes.hpp"

namespace vraudit::unreal {

/// Parsed .pak directory. The supported layout is the unencrypted,
/// uncompressed family:
///
///   footer (last 45 bytes):
///     u8  encrypted_index      (non-zero rejected)
///     u32 magic = 0x5A6F12E1
///     u32 version              (supported: 3..8)
///     u64 index_offset  u64 index_size
///     u8[20] index sha1        (not verified)
///   index:
///     u32 mount_point_len  char[...] (NUL included)
///     u32 entry_count
///     per entry: u32 path_len  char[...]  u64 offset  u64 size
///                u32 compression_flag     (0 = stored)
///
/// Entry offsets address the payload bytes directly.
struct PakIndex {
    struct Entry {
        std::uint64_t offset = 0;
        std::uint64_t size = 0;
        std::uint32_t compression_flag = 0;
    };

    std::string mount_point;
    std::map<std::string, Entry> entries;
    std::uint32_t version = 0;
};

constexpr std::uint32_t kPakMagic = 0x5A6F12E1;
constexpr std::uint32_t kPakMinVersion = 3;
constexpr std::uint32_t kPakMaxVersion = 8;
constexpr std::size_t kPakFooterSize = 45;

PakIndex parse_pak_index(BytesView data);

/// Payload of one uncompressed entry.
Bytes read_pak_entry(BytesView pak, const PakIndex& index, const std::string& path);

/// Pulls the single .pak out of a main.obb.png zip wrapper.
Bytes unwrap_obb(BytesView data);

} // namespace vraudit::unreal
