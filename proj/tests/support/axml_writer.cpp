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

#include <algorithm>
#include <array>
#include <map>

namespace testsupport {

namespace {

using vraudit::ByteWriter;

constexpr std::uint32_t kNoEntry = 0xFFFFFFFF;
const std::string kAndroidNs = "http://schemas.android.com/apk/res/android";

struct StringPool {
    std::vector<std::string> strings;
    std::map<std::string, std::uint32_t> index;

    std::uint32_t intern(const std::string& s) {
        auto it = index.find(s);
        if (it != index.end()) return it->second;
        std::uint32_t id = static_cast<std::uint32_t>(strings.size());
        strings.push_back(s);
        index[s] = id;
        return id;
    }
};

Bytes encode_pool(const StringPool& pool, bool utf8) {
    ByteWriter strings_blob;
    std::vector<std::uint32_t> offsets;
    for (const auto& s : pool.strings) {
        offsets.push_back(static_cast<std::uint32_t>(strings_blob.size()));
        if (utf8) {
            // char count and byte count, one byte each for the short strings
            // these fixtures produce
            strings_blob.u8(static_cast<std::uint8_t>(s.size()));
            strings_blob.u8(static_cast<std::uint8_t>(s.size()));
            strings_blob.ascii(s);
            strings_blob.u8(0);
        } else {
            strings_blob.u16(static_cast<std::uint16_t>(s.size()));
            for (char c : s) strings_blob.u16(static_cast<std::uint16_t>(c));
            strings_blob.u16(0);
        }
    }
    while (strings_blob.size() % 4 != 0) strings_blob.u8(0);

    ByteWriter chunk;
    std::uint32_t header_size = 0x1C;
    std::uint32_t strings_start = header_size + 4 * static_cast<std::uint32_t>(offsets.size());
    std::uint32_t total = strings_start + static_cast<std::uint32_t>(strings_blob.size());
    chunk.u16(0x0001); // string pool
    chunk.u16(static_cast<std::uint16_t>(header_size));
    chunk.u32(total);
    chunk.u32(static_cast<std::uint32_t>(pool.strings.size()));
    chunk.u32(0); // style count
    chunk.u32(utf8 ? (1u << 8) : 0u);
    chunk.u32(strings_start);
    chunk.u32(0); // styles start
    for (auto off : offsets) chunk.u32(off);
    chunk.bytes(strings_blob.data());
    return chunk.take();
}

void start_element(ByteWriter& out, std::uint32_t ns, std::uint32_t name,
                   const std::vector<std::array<std::uint32_t, 3>>& attrs) {
    // attrs: {attr_ns, attr_name, string_value}
    std::uint32_t size = 0x24 + 20 * static_cast<std::uint32_t>(attrs.size());
    out.u16(0x0102);
    out.u16(0x10);
    out.u32(size);
    out.u32(1);        // line number
    out.u32(kNoEntry); // comment
    out.u32(ns);
    out.u32(name);
    out.u16(0x14); // attribute start
    out.u16(0x14); // attribute size
    out.u16(static_cast<std::uint16_t>(attrs.size()));
    out.u16(0);
    out.u16(0);
    out.u16(0);
    for (const auto& attr : attrs) {
        out.u32(attr[0]);
        out.u32(attr[1]);
        out.u32(attr[2]); // raw value (string index)
        out.u16(8);       // typed value size
        out.u8(0);        // res0
        out.u8(0x03);     // TYPE_STRING
        out.u32(attr[2]);
    }
}

void end_element(ByteWriter& out, std::uint32_t ns, std::uint32_t name) {
    out.u16(0x0103);
    out.u16(0x10);
    out.u32(0x18);
    out.u32(1);
    out.u32(kNoEntry);
    out.u32(ns);
    out.u32(name);
}

} // namespace

Bytes write_axml_manifest(const ManifestSpec& spec, bool utf8_pool) {
    StringPool pool;
    std::uint32_t s_android = pool.intern("android");
    std::uint32_t s_ns = pool.intern(kAndroidNs);
    std::uint32_t s_manifest = pool.intern("manifest");
    std::uint32_t s_package = pool.intern("package");
    std::uint32_t s_pkgval = pool.intern(spec.package_name);
    std::uint32_t s_uses = pool.intern("uses-permission");
    std::uint32_t s_name = pool.intern("name");
    std::vector<std::uint32_t> perm_values;
    for (const auto& permission : spec.permissions) perm_values.push_back(pool.intern(permission));

    ByteWriter body;
    // start namespace
    body.u16(0x0100);
    body.u16(0x10);
    body.u32(0x18);
    body.u32(1);
    body.u32(kNoEntry);
    body.u32(s_android);
    body.u32(s_ns);

    start_element(body, kNoEntry, s_manifest, {{{kNoEntry, s_package, s_pkgval}}});
    for (auto value : perm_values) {
        start_element(body, kNoEntry, s_uses, {{{s_ns, s_name, value}}});
        end_element(body, kNoEntry, s_uses);
    }
    end_element(body, kNoEntry, s_manifest);

    // end namespace
    body.u16(0x0101);
    body.u16(0x10);
    body.u32(0x18);
    body.u32(1);
    body.u32(kNoEntry);
    body.u32(s_android);
    body.u32(s_ns);

    Bytes pool_chunk = encode_pool(pool, utf8_pool);

    ByteWriter doc;
    doc.u16(0x0003);
    doc.u16(8);
    doc.u32(static_cast<std::uint32_t>(8 + pool_chunk.size() + body.size()));
    doc.bytes(pool_chunk);
    doc.bytes(body.data());
    return doc.take();
}

std::string write_text_manifest(const ManifestSpec& spec) {
    std::string out = "<?xml version=\"1.0\" encoding=\"utf-8\"?>\n";
    out += "<manifest xmlns:android=\"" + kAndroidNs + "\" package=\"" + spec.package_name +
           "\">\n";
    for (const auto& permission : spec.permissions) {
        out += "  <uses-permission android:name=\"" + permission + "\"/>\n";
    }
    out += "</manifest>\n";
    return out;
}

} // namespace testsupport
