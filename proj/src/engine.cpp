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

#include "vraudit/engine.hpp"

namespace vraudit::apk {

namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool starts_with(std::string_view s, std::string_view prefix) {
    return s.substr(0, prefix.size()) == prefix;
}

} // namespace

const char* engine_name(EngineKind kind) {
    switch (kind) {
    case EngineKind::UnityIl2cpp: return "UnityIl2cpp";
    case EngineKind::UnityMono: return "UnityMono";
    case EngineKind::Unreal: return "Unreal";
    case EngineKind::Unknown: return "Unknown";
    }
    return "Unknown";
}

EngineKind detect_engine(const ApkPackage& pkg) {
    bool has_il2cpp = false;
    bool has_unreal_marker = false;
    bool has_assets_assembly = false;

    for (const auto& [path, entry] : pkg.entries()) {
        if (ends_with(path, "/libUE4.so") || ends_with(path, ".pak")) {
            has_unreal_marker = true;
        } else if (ends_with(path, "/libil2cpp.so")) {
            has_il2cpp = true;
        } else if (!has_assets_assembly && starts_with(path, "assets/") && ends_with(path, ".dll") &&
                   entry.uncompressed_size >= 2) {
            Bytes head = pkg.extract(path);
            if (head.size() >= 2 && head[0] == 'M' && head[1] == 'Z') has_assets_assembly = true;
        }
    }

    if (has_unreal_marker) return EngineKind::Unreal;
    if (has_il2cpp) return EngineKind::UnityIl2cpp;
    if (has_assets_assembly) return EngineKind::UnityMono;
    return EngineKind::Unknown;
}

} // namespace vraudit::apk
