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

#include "vraudit/unreal_config.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

namespace vraudit::unreal {

namespace {

std::string trim(std::string_view s) {
    std::size_t begin = 0, end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    return std::string(s.substr(begin, end - begin));
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

bool ends_with_ci(std::string_view s, std::string_view suffix) {
    if (s.size() < suffix.size()) return false;
    return lower(s.substr(s.size() - suffix.size())) == lower(suffix);
}

bool truthy(std::string_view value) {
    return value == "True" || value == "true" || value == "1";
}

std::string file_stem(const std::string& path) {
    auto slash = path.find_last_of('/');
    std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = name.find_last_of('.');
    return dot == std::string::npos ? name : name.substr(0, dot);
}

} // namespace

EngineConfig parse_engine_ini(std::string_view text) {
    EngineConfig config;
    std::string current_section;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::string line = trim(raw);
        if (line.empty() || line[0] == ';') continue;
        if (line[0] == '[') {
            auto close = line.find(']');
            if (close == std::string::npos) {
                raise(Errc::MalformedIni,
                      "unterminated section header at line " + std::to_string(line_no));
            }
            current_section = trim(line.substr(1, close - 1));
            config.sections.try_emplace(current_section);
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) continue; // bare tokens are ignored
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) continue;
        config.sections[current_section][key] = value;
    }
    return config;
}

std::string EngineConfig::serialize() const {
    std::string out;
    for (const auto& [section, pairs] : sections) {
        out += "[" + section + "]\n";
        for (const auto& [key, value] : pairs) {
            out += key + "=" + value + "\n";
        }
        out += "\n";
    }
    return out;
}

PluginManifest parse_uplugin(BytesView json_text, const std::string& virtual_path) {
    nlohmann::json doc = nlohmann::json::parse(json_text.begin(), json_text.end(), nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) {
        raise(Errc::MalformedPluginJson, virtual_path + " is not a JSON object");
    }
    PluginManifest manifest;
    manifest.plugin_name = doc.value("FriendlyName", file_stem(virtual_path));
    if (doc.contains("Modules")) {
        if (!doc["Modules"].is_array()) {
            raise(Errc::MalformedPluginJson, virtual_path + " Modules is not an array");
        }
        for (const auto& module : doc["Modules"]) {
            if (!module.is_object() || !module.contains("Name") || !module["Name"].is_string()) {
                raise(Errc::MalformedPluginJson, virtual_path + " module without a Name");
            }
            std::string name = module["Name"].get<std::string>();
            if (name.empty()) raise(Errc::MalformedPluginJson, virtual_path + " empty module name");
            manifest.modules.push_back(std::move(name));
        }
    }
    return manifest;
}

UnrealArtifacts read_config_and_plugins(BytesView pak, const PakIndex& index) {
    UnrealArtifacts artifacts;
    for (const auto& [path, entry] : index.entries) {
        if (ends_with_ci(path, "defaultengine.ini")) {
            Bytes data = read_pak_entry(pak, index, path);
            artifacts.config = parse_engine_ini(
                    std::string_view(reinterpret_cast<const char*>(data.data()), data.size()));
        } else if (ends_with_ci(path, ".uplugin")) {
            Bytes data = read_pak_entry(pak, index, path);
            artifacts.plugins.push_back(parse_uplugin(data, path));
        }
    }
    return artifacts;
}

std::vector<AccessEvidence> detect_sensitive_config(const UnrealArtifacts& artifacts,
                                                    const std::vector<catalog::ApiRule>& rules) {
    std::vector<AccessEvidence> out;

    if (artifacts.config) {
        for (const auto& [section, pairs] : artifacts.config->sections) {
            for (const auto& [key, value] : pairs) {
                for (const auto& rule : rules) {
                    if (rule.kind != catalog::RuleKind::ConfigKey) continue;
                    if (lower(key) != lower(rule.name)) continue;
                    if (!truthy(value)) continue;
                    out.push_back({rule.data_type, rule.name, {"[" + section + "] " + key}});
                }
            }
        }
    }
    for (const auto& plugin : artifacts.plugins) {
        for (const auto& module : plugin.modules) {
            for (const auto& rule : rules) {
                if (rule.kind != catalog::RuleKind::Module) continue;
                if (module != rule.name) continue;
                out.push_back({rule.data_type, rule.name, {module}});
            }
        }
    }

    std::sort(out.begin(), out.end(), [](const AccessEvidence& a, const AccessEvidence& b) {
        if (a.data_type != b.data_type) return a.data_type < b.data_type;
        if (a.api_name != b.api_name) return a.api_name < b.api_name;
        return a.path < b.path;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const AccessEvidence& a, const AccessEvidence& b) {
                              return a.data_type == b.data_type && a.api_name == b.api_name;
                          }),
              out.end());
    return out;
}

} // namespace vraudit::unreal
