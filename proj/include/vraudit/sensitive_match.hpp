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

#include <set>
#include <string>
#include <vector>

#include "vraudit/call_graph.hpp"
#include "vraudit/evidence.hpp"

namespace vraudit::unity {

/// Symbol-to-catalog matching. Tried in order: exact full name, exact on the
/// member segment after "::", then case-insensitive substring where the
/// contained side is at least 8 characters (Table 7 mixes method fragments
/// like UPvr_getEyeTrackingData with class names like OVREyeGaze).
bool name_matches(std::string_view symbol, std::string_view catalog_name);

/// Reachability evidence for every labeled node matching an api/class rule.
/// Paths are shortest from any root (in-degree-0 node); a matching node no
/// root reaches reports itself as a length-1 path. Results are sorted by
/// (data type, api name) and deduplicated.
std::vector<AccessEvidence> reach_sensitive(const NamedCallGraph& graph,
                                            const std::vector<catalog::ApiRule>& rules);

/// Presence-only matching over a bare name set (StringScan fallback and Mono
/// assemblies); every evidence path is [api_name].
std::vector<AccessEvidence> match_presence(const std::set<std::string>& names,
                                           const std::vector<catalog::ApiRule>& rules);

} // namespace vraudit::unity
