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

#include "vraudit/bytes.hpp"

namespace vraudit::apk {

struct ManifestInfo {
    std::string package_name;
    std::set<std::string> permissions; // android:name of every uses-permission
    bool is_binary_xml = false;
};

/// Parses an AndroidManifest.xml in either plain-text XML or Android binary
/// XML (AXML) encoding. Duplicate uses-permission declarations collapse into
/// the set. Binary support covers the string pool (UTF-8 and UTF-16),
/// namespaces, start/end elements and string-typed attributes, which is all a
/// manifest needs for package name and permission extraction.
ManifestInfo parse_manifest(BytesView data);

bool looks_like_binary_xml(BytesView data);

} // namespace vraudit::apk
