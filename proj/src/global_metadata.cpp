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

#include "vraudit/global_metadata.hpp"

namespace vraudit::unity {

namespace {

constexpr std::size_t kHeaderSize = 24;
constexpr std::size_t kMethodRecordSize = 16;

bool is_identifier_char(std::uint8_t c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
           c == '_' || c == '.';
}

MetadataTable parse_structured(BytesView data) {
    ByteReader r(data, Errc::TruncatedHeader);
    r.skip(4); // magic
    r.skip(4); // version, already validated
    std::uint32_t strings_offset = r.u32();
    std::uint32_t strings_size = r.u32();
    std::uint32_t methods_offset = r.u32();
    std::uint32_t method_count = r.u32();

    auto check_range = [&](std::uint64_t off, std::uint64_t len, const char* what) {
        if (off + len > data.size()) {
            raise(Errc::TruncatedHeader, std::string(what) + " section past end of data");
        }
    };
    check_range(strings_offset, strings_size, "string");
    check_range(methods_offset, std::uint64_t(method_count) * kMethodRecordSize, "method");

    MetadataTable table;
    table.parse_mode = MetadataTable::ParseMode::Structured;

    BytesView strings = data.subspan(strings_offset, strings_size);
    auto string_at = [&](std::uint32_t off) -> std::string {
        if (off >= strings.size()) raise(Errc::TruncatedHeader, "name offset past string section");
        std::size_t end = off;
        while (end < strings.size() && strings[end] != 0) ++end;
        return std::string(reinterpret_cast<const char*>(strings.data()) + off, end - off);
    };

    // All identifier strings in the section feed raw_strings, so the
    // raw_strings superset invariant holds in both modes.
    for (std::size_t start = 0; start < strings.size();) {
        std::size_t end = start;
        while (end < strings.size() && strings[end] != 0) ++end;
        if (end > start) {
            table.raw_strings.insert(
                    std::string(reinterpret_cast<const char*>(strings.data()) + start, end - start));
        }
        start = end + 1;
    }

    r.seek(methods_offset);
    std::set<std::uint64_t> used_offsets;
    for (std::uint32_t i = 0; i < method_count; ++i) {
        std::uint32_t name_off = r.u32();
        r.u32(); // flags
        std::uint64_t code_offset = r.u64();
        std::string name = string_at(name_off);
        if (name.empty()) continue;
        // Keep the first record on a duplicated code offset so the graph's
        // offset -> name labeling stays injective.
        if (!used_offsets.insert(code_offset).second) continue;
        if (table.name_to_offset.emplace(name, code_offset).second) {
            table.method_names.push_back(name);
        }
        table.raw_strings.insert(name);
    }
    return table;
}

} // namespace

std::set<std::string> scan_identifier_strings(BytesView data) {
    std::set<std::string> out;
    std::size_t run_start = 0;
    std::size_t run_len = 0;
    auto flush = [&](std::size_t end) {
        if (run_len >= 4) {
            out.insert(std::string(reinterpret_cast<const char*>(data.data()) + run_start,
                                   end - run_start));
        }
        run_len = 0;
    };
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (is_identifier_char(data[i])) {
            if (run_len == 0) run_start = i;
            ++run_len;
        } else {
            flush(i);
        }
    }
    flush(data.size());
    return out;
}

MetadataTable parse_global_metadata(BytesView data) {
    if (data.empty()) raise(Errc::EmptyInput, "metadata is empty");

    if (data.size() >= 8) {
        std::uint32_t magic = static_cast<std::uint32_t>(data[0]) | (data[1] << 8) |
                              (std::uint32_t(data[2]) << 16) | (std::uint32_t(data[3]) << 24);
        if (magic == kMetadataMagic) {
            std::uint32_t version = static_cast<std::uint32_t>(data[4]) | (data[5] << 8) |
                                    (std::uint32_t(data[6]) << 16) | (std::uint32_t(data[7]) << 24);
            if (version >= kMetadataMinVersion && version <= kMetadataMaxVersion) {
                if (data.size() < kHeaderSize) {
                    raise(Errc::TruncatedHeader, "metadata header truncated");
                }
                return parse_structured(data);
            }
            // Unsupported version: fall through to the scan.
        }
    } else if (data.size() >= 4) {
        std::uint32_t magic = static_cast<std::uint32_t>(data[0]) | (data[1] << 8) |
                              (std::uint32_t(data[2]) << 16) | (std::uint32_t(data[3]) << 24);
        if (magic == kMetadataMagic) raise(Errc::TruncatedHeader, "metadata header truncated");
    }

    MetadataTable table;
    table.parse_mode = MetadataTable::ParseMode::StringScan;
    table.raw_strings = scan_identifier_strings(data);
    return table;
}

} // namespace vraudit::unity
