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

#include "vraudit/call_graph.hpp"

#include <algorithm>

namespace vraudit::unity {

namespace {

struct TextSection {
    std::uint64_t address = 0; // sh_addr, the offset space the metadata uses
    BytesView data;
};

TextSection find_text_section(BytesView elf) {
    ByteReader r(elf, Errc::NotElf);
    if (elf.size() < 64) raise(Errc::NotElf, "too small for an ELF header");
    if (!(elf[0] == 0x7F && elf[1] == 'E' && elf[2] == 'L' && elf[3] == 'F')) {
        raise(Errc::NotElf, "bad ELF magic");
    }
    if (elf[4] != 2 || elf[5] != 1) {
        raise(Errc::WrongClassOrEndianness, "need ELF64 little-endian");
    }

    r.seek(0x28);
    std::uint64_t shoff = r.u64();
    r.seek(0x3A);
    std::uint16_t shentsize = r.u16();
    std::uint16_t shnum = r.u16();
    std::uint16_t shstrndx = r.u16();
    if (shoff == 0 || shnum == 0) raise(Errc::NoTextSection, "no section headers");
    if (shentsize < 64) raise(Errc::NotElf, "bad section header size");
    if (shoff + std::uint64_t(shnum) * shentsize > elf.size() || shstrndx >= shnum) {
        raise(Errc::NotElf, "section table out of range");
    }

    auto section = [&](std::uint16_t idx) {
        struct {
            std::uint32_t name;
            std::uint64_t addr, offset, size;
        } s{};
        r.seek(shoff + std::uint64_t(idx) * shentsize);
        s.name = r.u32();
        r.u32(); // type
        r.u64(); // flags
        s.addr = r.u64();
        s.offset = r.u64();
        s.size = r.u64();
        return s;
    };

    auto shstr = section(shstrndx);
    if (shstr.offset + shstr.size > elf.size()) raise(Errc::NotElf, "string table out of range");
    auto section_name = [&](std::uint32_t name_off) -> std::string_view {
        if (name_off >= shstr.size) return {};
        const char* base = reinterpret_cast<const char*>(elf.data()) + shstr.offset + name_off;
        std::size_t max_len = shstr.size - name_off;
        std::size_t len = 0;
        while (len < max_len && base[len] != 0) ++len;
        return std::string_view(base, len);
    };

    for (std::uint16_t i = 0; i < shnum; ++i) {
        auto s = section(i);
        if (section_name(s.name) == ".text") {
            if (s.offset + s.size > elf.size()) raise(Errc::NotElf, ".text out of range");
            return TextSection{s.addr, elf.subspan(s.offset, s.size)};
        }
    }
    raise(Errc::NoTextSection, "no .text section");
}

} // namespace

NamedCallGraph extract_call_edges(BytesView elf, const MetadataTable& metadata) {
    TextSection text = find_text_section(elf);

    NamedCallGraph graph;
    std::vector<std::uint64_t> labeled;
    for (const auto& [name, offset] : metadata.name_to_offset) {
        graph.labels[offset] = name;
        graph.nodes.insert(offset);
    }
    labeled.reserve(graph.labels.size());
    for (const auto& [offset, name] : graph.labels) labeled.push_back(offset);
    // std::map iteration is already sorted; keep the vector for binary search.

    std::uint64_t text_end = text.address + text.data.size();
    std::size_t word_count = text.data.size() / 4;
    for (std::size_t i = 0; i < word_count; ++i) {
        std::uint32_t w = static_cast<std::uint32_t>(text.data[4 * i]) |
                          (std::uint32_t(text.data[4 * i + 1]) << 8) |
                          (std::uint32_t(text.data[4 * i + 2]) << 16) |
                          (std::uint32_t(text.data[4 * i + 3]) << 24);
        if ((w >> 26) != 0x25) continue; // BL: imm26 with top bits 100101

        std::int64_t imm26 = w & 0x03FFFFFF;
        if (imm26 & 0x02000000) imm26 -= 0x04000000; // sign extend
        std::uint64_t address = text.address + 4 * i;
        std::uint64_t target = address + static_cast<std::uint64_t>(imm26 * 4);
        if (target < text.address || target >= text_end) continue;

        std::uint64_t caller = address;
        bool approx = false;
        auto it = std::upper_bound(labeled.begin(), labeled.end(), address);
        if (it != labeled.begin()) {
            caller = *std::prev(it);
            approx = caller != address;
        }
        graph.nodes.insert(caller);
        graph.nodes.insert(target);
        graph.edges.insert({caller, target, approx});
    }
    return graph;
}

} // namespace vraudit::unity
