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
#include <optional>
#include <string>
#include <vector>

#include "vraudit/bytes.hpp"

/// Reference writers and independent oracles for the test suites. These stay
/// deliberately separate from the library parsers they exercise: each one is
/// a second, straightforward implementation of the format or metric.
namespace testsupport {

using vraudit::Bytes;
using vraudit::BytesView;

// --- zip ------------------------------------------------------------------

struct ZipEntrySpec {
    std::string path;
    Bytes data;
    bool deflate = false;
};

Bytes write_zip(const std::vector<ZipEntrySpec>& entries);

// --- Android binary XML ----------------------------------------------------

struct ManifestSpec {
    std::string package_name;
    std::vector<std::string> permissions;
};

/// Encodes the manifest as AXML (string pool, namespace, elements,
/// string-typed android:name attributes).
Bytes write_axml_manifest(const ManifestSpec& spec, bool utf8_pool);

/// The same document as plain-text XML.
std::string write_text_manifest(const ManifestSpec& spec);

// --- Unity global-metadata ---------------------------------------------------

struct MetadataSpec {
    std::vector<std::pair<std::string, std::uint64_t>> methods; // name -> code offset
    std::uint32_t version = 29;
    std::vector<std::string> extra_strings; // land in the string section only
};

Bytes write_global_metadata(const MetadataSpec& spec);

// --- ELF / AArch64 -----------------------------------------------------------

std::uint32_t encode_bl(std::uint64_t from, std::uint64_t to);
constexpr std::uint32_t kAArch64Nop = 0xD503201F;

/// Wraps `text` as the .text section of a minimal ELF64 little-endian file
/// with sh_addr = text_address.
Bytes write_elf_with_text(BytesView text, std::uint64_t text_address);

/// Independent brute-force BL decoder used as the call-graph oracle; attributes
/// callers by a linear scan over the sorted label offsets.
std::vector<std::pair<std::uint64_t, std::uint64_t>> brute_force_bl_edges(
        BytesView text, std::uint64_t text_address,
        const std::vector<std::uint64_t>& label_offsets);

// --- .NET assembly -----------------------------------------------------------

struct AssemblySpec {
    struct TypeDef {
        std::string name_space;
        std::string name;
        std::vector<std::string> methods;
    };
    struct TypeRef {
        std::string name_space;
        std::string name;
    };
    struct MemberRef {
        std::size_t type_ref_index; // into type_refs
        std::string name;
    };

    std::vector<TypeDef> type_defs; // first should be "<Module>" by convention
    std::vector<TypeRef> type_refs;
    std::vector<MemberRef> member_refs;
};

Bytes write_assembly(const AssemblySpec& spec);

/// The names the spec itself implies, in the parser's output format — the
/// emitter's own symbol listing.
std::vector<std::string> assembly_expected_names(const AssemblySpec& spec);

// --- Unreal pak --------------------------------------------------------------

struct PakEntrySpec {
    std::string path;
    Bytes data;
    std::uint32_t compression_flag = 0;
};

Bytes write_pak(const std::string& mount_point, const std::vector<PakEntrySpec>& entries,
                std::uint32_t version = 4, bool encrypted_index = false,
                std::optional<std::uint32_t> magic_override = std::nullopt);

// --- text oracles ------------------------------------------------------------

struct TextCounts {
    long long sentences = 0;
    long long words = 0;
    long long letters = 0;
    long long syllables = 0;
    long long long_words = 0;
};

/// Regex-based re-implementation of the segmentation and counting rules.
TextCounts oracle_text_counts(const std::string& text);

struct OracleReadability {
    double ari, fres, lix, lpw, spw, wps, rt_seconds, st_seconds;
    long long sc, wc;
};

OracleReadability oracle_readability(const std::string& text);

/// Deterministic English-looking filler: `sentences` sentences of 4..12 words.
std::string generate_text(unsigned seed, int sentences);

} // namespace testsupport
