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

#include <string>

#include "vraudit/zip_archive.hpp"

namespace vraudit::apk {

enum class EngineKind {
    UnityIl2cpp,
    UnityMono,
    Unreal,
    Unknown,
};

const char* engine_name(EngineKind kind);

/// Classifies the build engine from archive structure alone:
///   Unreal       — any lib entry named libUE4.so, or any .pak entry
///   UnityIl2cpp  — a libil2cpp.so entry
///   UnityMono    — a .dll under assets/ with PE magic and no libil2cpp.so
/// Precedence Unreal > UnityIl2cpp > UnityMono resolves hybrid archives;
/// results carry no error state — Unknown means no rule fired.
EngineKind detect_engine(const ApkPackage& pkg);

} // namespace vraudit::apk
