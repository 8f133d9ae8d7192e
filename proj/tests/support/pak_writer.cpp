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

#include "fixtures.hpp"

namespace testsupport {

namespace {
using vraudit::ByteWriter;

void pak_string(ByteWriter& out, const std::string& s) {
    out.u32(static_cast<std::uint32_t>(s.size() + 1));
    out.ascii(s);
    out.u8(0);
}
} // namespace

Bytes write_pak(const std::string& mount_point, const std::vector<PakEntrySpec>& entries,
                std::uint32_t version, bool encrypted_index,
                std::optional<std::uint32_t> magic_override) {
    ByteWriter out;
    std::vector<std::uint64_t> offsets;
    for (const auto& entry : entries) {
        offsets.push_back(out.size());
        out.bytes(entry.data);
    }

    std::uint64_t index_offset = out.size();
    pak_string(out, mount_point);
    out.u32(static_cast<std::uint32_t>(entries.size()));
    for (std::size_t i = 0; i < entries.size(); ++i) {
        pak_string(out, entries[i].path);
        out.u64(offsets[i]);
        out.u64(entries[i].data.size());
        out.u32(entries[i].compression_flag);
    }
    std::uint64_t index_size = out.size() - index_offset;

    out.u8(encrypted_index ? 1 : 0);
    out.u32(magic_override.value_or(0x5A6F12E1));
    out.u32(version);
    out.u64(index_offset);
    out.u64(index_size);
    out.fill(20, 0xCD); // sha1 placeholder
    return out.take();
}

} // namespace testsupport
