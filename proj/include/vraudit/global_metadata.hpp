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
#include <set>
#include <string>
#include <vector>

#include "vraudit/bytes.hpp"

namespace vraudit::unity {

/// Recovered symbol information from a global-metadata.dat file.
///
/// Structured mode understands one pinned header layout (the real format
/// shifts between engine versions):
///
///   u32 magic   = 0xFAB11BAF
///   u32 version   (supported: 24..31)
///   u32 strings_offset   u32 strings_size      NUL-joined UTF-8 names
///   u32 methods_offset   u32 method_count      16-byte records:
///       u32 name_offset (into string section), u32 flags, u64 code_offset
///
/// Anything else — no magic, or a version outside the range — degrades to
/// StringScan: every maximal run of >=4 identifier characters
/// ([A-Za-z0-9_.]) becomes a raw string and no offsets are produced.
struct MetadataTable {
    enum class ParseMode { Structured, StringScan };

    std::vector<std::string> method_names;
    std::map<std::string, std::uint64_t> name_to_offset;
    std::set<std::string> raw_strings;
    ParseMode parse_mode = ParseMode::StringScan;
};

constexpr std::uint32_t kMetadataMagic = 0xFAB11BAF;
constexpr std::uint32_t kMetadataMinVersion = 24;
constexpr std::uint32_t kMetadataMaxVersion = 31;

MetadataTable parse_global_metadata(BytesView data);

/// The StringScan extraction on its own; also used as the fallback path.
std::set<std::string> scan_identifier_strings(BytesView data);

} // namespace vraudit::unity
