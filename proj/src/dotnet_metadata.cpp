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

#include "vraudit/dotnet_metadata.hpp"

#include <array>
#include <bit>
#include <map>
#include <vector>

namespace vraudit::unity {

namespace {

constexpr int kTableModule = 0x00;
constexpr int kTableTypeRef = 0x01;
constexpr int kTableTypeDef = 0x02;
constexpr int kTableMethodDef = 0x06;
constexpr int kTableMemberRef = 0x0A;
constexpr int kTableCount = 0x2D;

// Column encodings for the ECMA-335 #~ stream. Rows are only sized, never
// interpreted, for tables we do not care about.
enum class Col : std::uint8_t { U16, U32, Str, Guid, Blob, Idx, Coded };

enum class CodedKind : std::uint8_t {
    TypeDefOrRef,
    HasConstant,
    HasCustomAttribute,
    HasFieldMarshal,
    HasDeclSecurity,
    MemberRefParent,
    HasSemantics,
    MethodDefOrRef,
    MemberForwarded,
    Implementation,
    CustomAttributeType,
    ResolutionScope,
    TypeOrMethodDef,
};

struct Column {
    Col kind;
    std::uint8_t arg = 0; // target table for Idx, CodedKind for Coded
};

constexpr Column U16{Col::U16};
constexpr Column U32{Col::U32};
constexpr Column STR{Col::Str};
constexpr Column GUID{Col::Guid};
constexpr Column BLOB{Col::Blob};
constexpr Column IDX(int table) { return {Col::Idx, static_cast<std::uint8_t>(table)}; }
constexpr Column CODED(CodedKind kind) { return {Col::Coded, static_cast<std::uint8_t>(kind)}; }

const std::vector<Column>& table_schema(int id) {
    static const std::map<int, std::vector<Column>> schemas = {
        {0x00, {U16, STR, GUID, GUID, GUID}},
        {0x01, {CODED(CodedKind::ResolutionScope), STR, STR}},
        {0x02, {U32, STR, STR, CODED(CodedKind::TypeDefOrRef), IDX(0x04), IDX(0x06)}},
        {0x03, {IDX(0x04)}},
        {0x04, {U16, STR, BLOB}},
        {0x05, {IDX(0x06)}},
        {0x06, {U32, U16, U16, STR, BLOB, IDX(0x08)}},
        {0x07, {IDX(0x08)}},
        {0x08, {U16, U16, STR}},
        {0x09, {IDX(0x02), CODED(CodedKind::TypeDefOrRef)}},
        {0x0A, {CODED(CodedKind::MemberRefParent), STR, BLOB}},
        {0x0B, {U16, CODED(CodedKind::HasConstant), BLOB}},
        {0x0C, {CODED(CodedKind::HasCustomAttribute), CODED(CodedKind::CustomAttributeType), BLOB}},
        {0x0D, {CODED(CodedKind::HasFieldMarshal), BLOB}},
        {0x0E, {U16, CODED(CodedKind::HasDeclSecurity), BLOB}},
        {0x0F, {U16, U32, IDX(0x02)}},
        {0x10, {U32, IDX(0x04)}},
        {0x11, {BLOB}},
        {0x12, {IDX(0x02), IDX(0x14)}},
        {0x13, {IDX(0x14)}},
        {0x14, {U16, STR, CODED(CodedKind::TypeDefOrRef)}},
        {0x15, {IDX(0x02), IDX(0x17)}},
        {0x16, {IDX(0x17)}},
        {0x17, {U16, STR, BLOB}},
        {0x18, {U16, IDX(0x06), CODED(CodedKind::HasSemantics)}},
        {0x19, {IDX(0x02), CODED(CodedKind::MethodDefOrRef), CODED(CodedKind::MethodDefOrRef)}},
        {0x1A, {STR}},
        {0x1B, {BLOB}},
        {0x1C, {U16, CODED(CodedKind::MemberForwarded), STR, IDX(0x1A)}},
        {0x1D, {U32, IDX(0x04)}},
        {0x1E, {U32, U32}},
        {0x1F, {U32}},
        {0x20, {U32, U16, U16, U16, U16, U32, BLOB, STR, STR}},
        {0x21, {U32}},
        {0x22, {U32, U32, U32}},
        {0x23, {U16, U16, U16, U16, U32, BLOB, STR, STR, BLOB}},
        {0x24, {U32, IDX(0x23)}},
        {0x25, {U32, U32, U32, IDX(0x23)}},
        {0x26, {U32, STR, BLOB}},
        {0x27, {U32, U32, STR, STR, CODED(CodedKind::Implementation)}},
        {0x28, {U32, U32, STR, CODED(CodedKind::Implementation)}},
        {0x29, {IDX(0x02), IDX(0x02)}},
        {0x2A, {U16, U16, CODED(CodedKind::TypeOrMethodDef), STR}},
        {0x2B, {CODED(CodedKind::MethodDefOrRef), BLOB}},
        {0x2C, {IDX(0x2A), CODED(CodedKind::TypeDefOrRef)}},
    };
    auto it = schemas.find(id);
    if (it == schemas.end()) raise(Errc::CorruptMetadata, "table id out of schema range");
    return it->second;
}

struct CodedInfo {
    std::uint8_t tag_bits;
    std::vector<int> tables; // -1 marks an unused slot
};

const CodedInfo& coded_info(CodedKind kind) {
    static const std::map<CodedKind, CodedInfo> infos = {
        {CodedKind::TypeDefOrRef, {2, {0x02, 0x01, 0x1B}}},
        {CodedKind::HasConstant, {2, {0x04, 0x08, 0x17}}},
        {CodedKind::HasCustomAttribute,
         {5, {0x06, 0x04, 0x01, 0x02, 0x08, 0x09, 0x0A, 0x00, 0x0E, 0x17, 0x14,
              0x11, 0x1A, 0x1B, 0x20, 0x23, 0x26, 0x27, 0x28, 0x2A, 0x2C, 0x2B}}},
        {CodedKind::HasFieldMarshal, {1, {0x04, 0x08}}},
        {CodedKind::HasDeclSecurity, {2, {0x02, 0x06, 0x20}}},
        {CodedKind::MemberRefParent, {3, {0x02, 0x01, 0x1A, 0x06, 0x1B}}},
        {CodedKind::HasSemantics, {1, {0x14, 0x17}}},
        {CodedKind::MethodDefOrRef, {1, {0x06, 0x0A}}},
        {CodedKind::MemberForwarded, {1, {0x04, 0x06}}},
        {CodedKind::Implementation, {2, {0x26, 0x23, 0x27}}},
        {CodedKind::CustomAttributeType, {3, {-1, -1, 0x06, 0x0A, -1}}},
        {CodedKind::ResolutionScope, {2, {0x00, 0x1A, 0x23, 0x01}}},
        {CodedKind::TypeOrMethodDef, {1, {0x02, 0x06}}},
    };
    return infos.at(kind);
}

struct SectionMap {
    struct Section {
        std::uint32_t vaddr, vsize, rawptr, rawsize;
    };
    std::vector<Section> sections;

    std::size_t to_offset(std::uint32_t rva, BytesView file) const {
        for (const auto& s : sections) {
            std::uint32_t span = std::max(s.vsize, s.rawsize);
            if (rva >= s.vaddr && rva < s.vaddr + span) {
                std::size_t off = s.rawptr + (rva - s.vaddr);
                if (off >= file.size()) raise(Errc::CorruptMetadata, "rva outside file");
                return off;
            }
        }
        raise(Errc::CorruptMetadata, "rva not in any section");
    }
};

struct Row {
    std::vector<std::uint32_t> cells;
};

class TablesReader {
public:
    TablesReader(BytesView tables_stream, BytesView strings_heap)
        : strings_(strings_heap), r_(tables_stream, Errc::CorruptMetadata) {
        r_.skip(4);                  // reserved
        r_.skip(2);                  // major, minor
        std::uint8_t heap_sizes = r_.u8();
        r_.skip(1);                  // reserved
        std::uint64_t valid = r_.u64();
        r_.skip(8);                  // sorted
        wide_str_ = heap_sizes & 0x01;
        wide_guid_ = heap_sizes & 0x02;
        wide_blob_ = heap_sizes & 0x04;

        rows_.fill(0);
        for (int t = 0; t < 64; ++t) {
            if (!(valid & (1ull << t))) continue;
            if (t >= kTableCount) raise(Errc::CorruptMetadata, "unknown metadata table present");
            rows_[t] = r_.u32();
        }
        for (int t = 0; t < kTableCount; ++t) {
            if (rows_[t] == 0) continue;
            auto& out = tables_[t];
            out.reserve(rows_[t]);
            const auto& schema = table_schema(t);
            for (std::uint32_t i = 0; i < rows_[t]; ++i) {
                Row row;
                row.cells.reserve(schema.size());
                for (const auto& col : schema) row.cells.push_back(read_cell(col));
                out.push_back(std::move(row));
            }
        }
    }

    std::uint32_t row_count(int table) const { return rows_[table]; }
    const std::vector<Row>& table(int id) const { return tables_.at(id); }
    bool has(int id) const { return tables_.count(id) != 0; }

    std::string str(std::uint32_t index) const {
        if (index >= strings_.size()) raise(Errc::CorruptMetadata, "string heap index out of range");
        std::size_t end = index;
        while (end < strings_.size() && strings_[end] != 0) ++end;
        return std::string(reinterpret_cast<const char*>(strings_.data()) + index, end - index);
    }

    /// Decodes a coded index into (table, 1-based row).
    std::pair<int, std::uint32_t> decode(CodedKind kind, std::uint32_t value) const {
        const auto& info = coded_info(kind);
        std::uint32_t tag = value & ((1u << info.tag_bits) - 1);
        std::uint32_t row = value >> info.tag_bits;
        if (tag >= info.tables.size() || info.tables[tag] < 0) {
            raise(Errc::CorruptMetadata, "invalid coded index tag");
        }
        return {info.tables[tag], row};
    }

private:
    std::uint32_t read_cell(const Column& col) {
        switch (col.kind) {
        case Col::U16: return r_.u16();
        case Col::U32: return r_.u32();
        case Col::Str: return wide_str_ ? r_.u32() : r_.u16();
        case Col::Guid: return wide_guid_ ? r_.u32() : r_.u16();
        case Col::Blob: return wide_blob_ ? r_.u32() : r_.u16();
        case Col::Idx: return rows_[col.arg] >= 0x10000 ? r_.u32() : r_.u16();
        case Col::Coded: {
            const auto& info = coded_info(static_cast<CodedKind>(col.arg));
            std::uint32_t max_rows = 0;
            for (int t : info.tables) {
                if (t >= 0) max_rows = std::max(max_rows, rows_[t]);
            }
            bool wide = max_rows >= (1u << (16 - info.tag_bits));
            return wide ? r_.u32() : r_.u16();
        }
        }
        raise(Errc::CorruptMetadata, "bad column kind");
    }

    BytesView strings_;
    ByteReader r_;
    bool wide_str_ = false, wide_guid_ = false, wide_blob_ = false;
    std::array<std::uint32_t, kTableCount> rows_{};
    std::map<int, std::vector<Row>> tables_;
};

std::string format_type(const std::string& ns, const std::string& name) {
    return ns.empty() ? name : ns + "." + name;
}

} // namespace

std::set<std::string> parse_dotnet_names(BytesView data) {
    if (data.size() < 0x40 || data[0] != 'M' || data[1] != 'Z') {
        raise(Errc::NotPe, "missing MZ header");
    }
    ByteReader r(data, Errc::NotPe);
    r.seek(0x3C);
    std::uint32_t pe_off = r.u32();
    r.seek(pe_off);
    if (r.u32() != 0x00004550) raise(Errc::NotPe, "missing PE signature"); // "PE\0\0"
    r.skip(2);                        // machine
    std::uint16_t nsections = r.u16();
    r.skip(4 + 4 + 4);                // timestamp, symbol table, symbol count
    std::uint16_t opt_size = r.u16();
    r.skip(2);                        // characteristics

    std::size_t opt_at = r.pos();
    std::uint16_t opt_magic = r.u16();
    std::size_t dir_count_at, dirs_at;
    if (opt_magic == 0x10B) {         // PE32
        dir_count_at = opt_at + 92;
        dirs_at = opt_at + 96;
    } else if (opt_magic == 0x20B) {  // PE32+
        dir_count_at = opt_at + 108;
        dirs_at = opt_at + 112;
    } else {
        raise(Errc::NotPe, "unknown optional header magic");
    }
    r.seek(dir_count_at);
    std::uint32_t dir_count = r.u32();
    if (dir_count <= 14) raise(Errc::NoCliHeader, "no COM descriptor directory");
    r.seek(dirs_at + 14 * 8);
    std::uint32_t cli_rva = r.u32();
    std::uint32_t cli_size = r.u32();
    if (cli_rva == 0 || cli_size == 0) raise(Errc::NoCliHeader, "empty COM descriptor directory");

    SectionMap sections;
    r.seek(opt_at + opt_size);
    for (std::uint16_t i = 0; i < nsections; ++i) {
        r.skip(8); // name
        std::uint32_t vsize = r.u32();
        std::uint32_t vaddr = r.u32();
        std::uint32_t rawsize = r.u32();
        std::uint32_t rawptr = r.u32();
        r.skip(16);
        sections.sections.push_back({vaddr, vsize, rawptr, rawsize});
    }

    // CLI header -> metadata root
    ByteReader meta_r(data, Errc::CorruptMetadata);
    meta_r.seek(sections.to_offset(cli_rva, data));
    meta_r.skip(4 + 2 + 2); // cb, runtime major/minor
    std::uint32_t md_rva = meta_r.u32();
    std::uint32_t md_size = meta_r.u32();
    if (md_rva == 0) raise(Errc::NoCliHeader, "CLI header has no metadata");

    std::size_t md_off = sections.to_offset(md_rva, data);
    if (md_off + md_size > data.size()) raise(Errc::CorruptMetadata, "metadata overruns file");
    BytesView md = data.subspan(md_off, md_size);
    ByteReader root(md, Errc::CorruptMetadata);
    if (root.u32() != 0x424A5342) raise(Errc::CorruptMetadata, "bad metadata magic"); // "BSJB"
    root.skip(2 + 2 + 4);
    std::uint32_t version_len = root.u32();
    root.skip(version_len);
    root.skip(2); // flags
    std::uint16_t nstreams = root.u16();

    BytesView tables_stream, strings_heap;
    for (std::uint16_t i = 0; i < nstreams; ++i) {
        std::uint32_t offset = root.u32();
        std::uint32_t size = root.u32();
        std::string name;
        for (;;) {
            char c = static_cast<char>(root.u8());
            if (c == 0) break;
            name.push_back(c);
        }
        while (root.pos() % 4 != 0) root.u8();
        if (offset + size > md.size()) raise(Errc::CorruptMetadata, "stream overruns metadata");
        if (name == "#~" || name == "#-") tables_stream = md.subspan(offset, size);
        if (name == "#Strings") strings_heap = md.subspan(offset, size);
    }
    if (tables_stream.empty()) raise(Errc::CorruptMetadata, "no #~ stream");

    TablesReader tables(tables_stream, strings_heap);
    std::set<std::string> names;

    std::vector<std::string> typedef_names;
    if (tables.has(kTableTypeDef)) {
        for (const auto& row : tables.table(kTableTypeDef)) {
            std::string t = format_type(tables.str(row.cells[2]), tables.str(row.cells[1]));
            typedef_names.push_back(t);
            names.insert(t);
        }
    }
    std::vector<std::string> typeref_names;
    if (tables.has(kTableTypeRef)) {
        for (const auto& row : tables.table(kTableTypeRef)) {
            std::string t = format_type(tables.str(row.cells[2]), tables.str(row.cells[1]));
            typeref_names.push_back(t);
            names.insert(t);
        }
    }

    if (tables.has(kTableMethodDef)) {
        static const std::vector<Row> kNoRows;
        const auto& methods = tables.table(kTableMethodDef);
        const auto& typedefs = tables.has(kTableTypeDef) ? tables.table(kTableTypeDef) : kNoRows;
        // TypeDef row i owns methods [MethodList_i, MethodList_{i+1}).
        for (std::size_t m = 0; m < methods.size(); ++m) {
            std::string method_name = tables.str(methods[m].cells[3]);
            std::string owner;
            for (std::size_t t = 0; t < typedefs.size(); ++t) {
                std::uint32_t begin = typedefs[t].cells[5];
                std::uint32_t end = (t + 1 < typedefs.size())
                                            ? typedefs[t + 1].cells[5]
                                            : static_cast<std::uint32_t>(methods.size()) + 1;
                if (m + 1 >= begin && m + 1 < end) {
                    owner = typedef_names[t];
                    break;
                }
            }
            names.insert(owner.empty() ? method_name : owner + "::" + method_name);
        }
    }

    if (tables.has(kTableMemberRef)) {
        for (const auto& row : tables.table(kTableMemberRef)) {
            std::string member = tables.str(row.cells[1]);
            auto [parent_table, parent_row] = tables.decode(CodedKind::MemberRefParent, row.cells[0]);
            std::string owner;
            if (parent_table == kTableTypeRef && parent_row >= 1 &&
                parent_row <= typeref_names.size()) {
                owner = typeref_names[parent_row - 1];
            } else if (parent_table == kTableTypeDef && parent_row >= 1 &&
                       parent_row <= typedef_names.size()) {
                owner = typedef_names[parent_row - 1];
            }
            names.insert(owner.empty() ? member : owner + "::" + member);
        }
    }
    return names;
}

} // namespace vraudit::unity
