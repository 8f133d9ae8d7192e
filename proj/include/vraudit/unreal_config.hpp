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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vraudit/evidence.hpp"
#include "vraudit/unreal_pak.hpp"

namespace vraudit::unreal {

/// DefaultEngine.ini contents: section -> key -> verbatim value.
struct EngineConfig {
    std::map<std::string, std::map<std::string, std::string>> sections;

    bool operator==(const EngineConfig&) const = default;

    std::string serialize() const;
};

/// One .uplugin descriptor: the plugin name and its module list.
struct PluginManifest {
    std::string plugin_name;
    std::vector<std::string> modules;
};

/// Ini grammar: [Section] headers, key=value pairs, ';' comments. Values keep
/// interior spacing; only surrounding whitespace is trimmed. Duplicate keys
/// within a section take the last value.
EngineConfig parse_engine_ini(std::string_view text);

/// .uplugin JSON: plugin name from "FriendlyName" falling back to the file
/// stem, modules from "Modules"[i]."Name".
PluginManifest parse_uplugin(BytesView json_text, const std::string& virtual_path);

struct UnrealArtifacts {
    std::optional<EngineConfig> config;
    std::vector<PluginManifest> plugins;
};

/// Extracts any DefaultEngine.ini (case-insensitive suffix match) and every
/// *.uplugin from an opened pak. Only uncompressed entries are readable.
UnrealArtifacts read_config_and_plugins(BytesView pak, const PakIndex& index);

/// Evidence from configuration: an ini key matching a config rule with a true
/// value (True/true/1 — anything else is treated as disabled), or a module
/// name exactly matching a module rule. Ini keys match case-insensitively;
/// the hosting section is recorded in the evidence path.
std::vector<AccessEvidence> detect_sensitive_config(const UnrealArtifacts& artifacts,
                                                    const std::vector<catalog::ApiRule>& rules);

} // namespace vraudit::unreal
