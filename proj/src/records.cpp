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

#include "vraudit/records.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace vraudit::compliance {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string canonical_store(const std::string& name, const std::string& path) {
    for (const char* store : kStores) {
        if (lower(name) == lower(store)) return store;
    }
    raise(Errc::UnknownStore, path + ": " + name);
}

const std::set<std::string> kKnownKeys = {
        "app_id", "store", "name", "age_rating", "category", "declared_permissions",
        "supported_languages", "policy_url", "play_style", "environment_requirement"};

AppRecord parse_record(const nlohmann::ordered_json& item, const std::string& path) {
    if (!item.is_object()) raise(Errc::SchemaViolation, path + ": not an object");
    for (const char* field : {"app_id", "store", "name"}) {
        if (!item.contains(field) || !item[field].is_string() ||
            item[field].get<std::string>().empty()) {
            raise(Errc::SchemaViolation, path + "." + field);
        }
    }
    AppRecord record;
    record.app_id = item["app_id"].get<std::string>();
    record.store = canonical_store(item["store"].get<std::string>(), path + ".store");
    record.name = item["name"].get<std::string>();

    if (item.contains("age_rating") && !item["age_rating"].is_null()) {
        const auto& age = item["age_rating"];
        if (age.is_string() && lower(age.get<std::string>()) == "all") {
            record.age_rating = AgeRating{true, 0};
        } else if (age.is_number_integer() && age.get<int>() >= 0) {
            record.age_rating = AgeRating{false, age.get<int>()};
        } else {
            raise(Errc::SchemaViolation, path + ".age_rating");
        }
    }
    if (item.contains("category") && !item["category"].is_null()) {
        if (!item["category"].is_string()) raise(Errc::SchemaViolation, path + ".category");
        record.category = item["category"].get<std::string>();
    }
    auto string_set = [&](const char* field) -> std::set<std::string> {
        std::set<std::string> out;
        if (!item[field].is_array()) raise(Errc::SchemaViolation, path + "." + field);
        for (const auto& v : item[field]) {
            if (!v.is_string()) raise(Errc::SchemaViolation, path + "." + field + "[]");
            out.insert(v.get<std::string>());
        }
        return out;
    };
    if (item.contains("declared_permissions") && !item["declared_permissions"].is_null()) {
        record.declared_permissions = string_set("declared_permissions");
    }
    if (item.contains("supported_languages") && !item["supported_languages"].is_null()) {
        record.supported_languages = string_set("supported_languages");
    }
    auto optional_string = [&](const char* field) -> std::optional<std::string> {
        if (!item.contains(field) || item[field].is_null()) return std::nullopt;
        if (!item[field].is_string()) raise(Errc::SchemaViolation, path + "." + field);
        return item[field].get<std::string>();
    };
    record.policy_url = optional_string("policy_url");
    record.play_style = optional_string("play_style");
    record.environment_requirement = optional_string("environment_requirement");

    for (const auto& [key, value] : item.items()) {
        if (!kKnownKeys.count(key)) record.extras[key] = value;
    }
    return record;
}

} // namespace

std::vector<AppRecord> ingest_records(BytesView json_text) {
    nlohmann::ordered_json doc =
            nlohmann::ordered_json::parse(json_text.begin(), json_text.end(), nullptr, false);
    if (doc.is_discarded() || !doc.is_array()) {
        raise(Errc::SchemaViolation, "records: expected a JSON array");
    }
    std::vector<AppRecord> records;
    records.reserve(doc.size());
    for (std::size_t i = 0; i < doc.size(); ++i) {
        records.push_back(parse_record(doc[i], "records[" + std::to_string(i) + "]"));
    }
    return records;
}

std::vector<AppRecord> ingest_records_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::IoError, "cannot open records " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    return ingest_records(as_bytes(text));
}

std::string serialize_records(const std::vector<AppRecord>& records) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& record : records) {
        nlohmann::ordered_json item;
        item["app_id"] = record.app_id;
        item["store"] = record.store;
        item["name"] = record.name;
        if (record.age_rating) {
            if (record.age_rating->all) {
                item["age_rating"] = "all";
            } else {
                item["age_rating"] = record.age_rating->min_age;
            }
        }
        if (!record.category.empty()) item["category"] = record.category;
        if (record.declared_permissions) {
            item["declared_permissions"] = *record.declared_permissions;
        }
        if (!record.supported_languages.empty()) {
            item["supported_languages"] = record.supported_languages;
        }
        if (record.policy_url) item["policy_url"] = *record.policy_url;
        if (record.play_style) item["play_style"] = *record.play_style;
        if (record.environment_requirement) {
            item["environment_requirement"] = *record.environment_requirement;
        }
        for (const auto& [key, value] : record.extras.items()) item[key] = value;
        doc.push_back(std::move(item));
    }
    return doc.dump(2);
}

} // namespace vraudit::compliance
