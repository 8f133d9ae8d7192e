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
#include "vraudit/global_metadata.hpp"

namespace vraudit::unity {

/// Call edges between code offsets, with method names attached where the
/// metadata table labels an offset. Immutable once built.
struct NamedCallGraph {
    struct Edge {
        std::uint64_t caller;
        std::uint64_t callee;
        /// True when the caller was attributed by the greatest-labeled-offset
        /// rule rather than landing exactly on a labeled offset.
        bool approx_caller;

        auto operator<=>(const Edge&) const = default;
    };

    std::set<std::uint64_t> nodes;
    std::set<Edge> edges;
    std::map<std::uint64_t, std::string> labels;
};

/// Scans the .text section of a 64-bit little-endian ELF for direct BL calls
/// (4-byte aligned, top 6 bits 100101) and builds the named graph. Callee
/// targets outside .text are dropped. Callers are attributed to the greatest
/// labeled offset at or before the instruction address; instructions before
/// any labeled offset keep their own address as the caller node.
NamedCallGraph extract_call_edges(BytesView elf, const MetadataTable& metadata);

} // namespace vraudit::unity
