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
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "vraudit/bytes.hpp"

namespace vraudit::compliance {

inline constexpr const char* kStores[] = {"Oculus", "Viveport", "Pico", "Microsoft",
                                          "PlayStation"};

/// "all" on a store page, or a minimum age.
struct AgeRating {
    bool all = false;
    int min_age = 0;

    bool operator==(const AgeRating&) const = default;
};

/// One store-page record. `declared_permissions` stays disengaged when the
/// store does not disclose permissions at all — an empty set means "discloses
/// none", which is checkable; absence is not.
struct AppRecord {
    std::string app_id;
    std::string store;
    std::string name;
    std::optional<AgeRating> age_rating;
    std::string category;
    std::optional<std::set<std::string>> declared_permissions;
    std::set<std::string> supported_languages;
    std::optional<std::string> policy_url;
    std::optional<std::string> play_style;
    std::optional<std::string> environment_requirement;
    nlohmann::ordered_json extras = nlohmann::ordered_json::object();
};

std::vector<AppRecord> ingest_records(BytesView json_text);
std::vector<AppRecord> ingest_records_file(const std::string& path);
std::string serialize_records(const std::vector<AppRecord>& records);

} // namespace vraudit::compliance
