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

#include "vraudit/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace vraudit::catalog {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

} // namespace

const char* data_type_name(DataType t) {
    switch (t) {
    case DataType::Body: return "Body";
    case DataType::Face: return "Face";
    case DataType::Eye: return "Eye";
    case DataType::Hand: return "Hand";
    }
    return "?";
}

std::optional<DataType> data_type_from(std::string_view name) {
    for (DataType t : kAllDataTypes) {
        if (name == data_type_name(t)) return t;
    }
    return std::nullopt;
}

const char* rule_kind_name(RuleKind k) {
    switch (k) {
    case RuleKind::Api: return "api";
    case RuleKind::Class: return "class";
    case RuleKind::Module: return "module";
    case RuleKind::ConfigKey: return "config_key";
    }
    return "?";
}

std::optional<RuleKind> rule_kind_from(std::string_view name) {
    if (name == "api") return RuleKind::Api;
    if (name == "class") return RuleKind::Class;
    if (name == "module") return RuleKind::Module;
    if (name == "config_key") return RuleKind::ConfigKey;
    return std::nullopt;
}

SensitivityCatalog SensitivityCatalog::load(BytesView json_text) {
    nlohmann::json doc = nlohmann::json::parse(json_text.begin(), json_text.end(), nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) {
        raise(Errc::SchemaViolation, "catalog is not a JSON object");
    }
    if (!doc.contains("api_rules") || !doc["api_rules"].is_array()) {
        raise(Errc::SchemaViolation, "missing api_rules array");
    }
    if (!doc.contains("policy_corpus") || !doc["policy_corpus"].is_object()) {
        raise(Errc::SchemaViolation, "missing policy_corpus object");
    }

    SensitivityCatalog cat;
    std::set<std::tuple<std::string, std::string, std::string, std::string>> seen;
    for (const auto& item : doc["api_rules"]) {
        for (const char* field : {"store", "engine", "data_type", "kind", "name"}) {
            if (!item.contains(field) || !item[field].is_string()) {
                raise(Errc::SchemaViolation, std::string("api_rules[].") + field);
            }
        }
        ApiRule rule;
        rule.store = item["store"].get<std::string>();
        rule.engine = item["engine"].get<std::string>();
        auto dt = data_type_from(item["data_type"].get<std::string>());
        if (!dt) raise(Errc::UnknownDataType, item["data_type"].get<std::string>());
        rule.data_type = *dt;
        auto kind = rule_kind_from(item["kind"].get<std::string>());
        if (!kind) raise(Errc::SchemaViolation, "unknown kind " + item["kind"].get<std::string>());
        rule.kind = *kind;
        rule.name = item["name"].get<std::string>();
        if (rule.name.empty()) raise(Errc::SchemaViolation, "empty rule name");
        rule.guessed = item.value("guessed", false);

        auto key = std::make_tuple(lower(rule.store), lower(rule.engine),
                                   std::string(rule_kind_name(rule.kind)), rule.name);
        if (!seen.insert(key).second) {
            raise(Errc::DuplicateRule, rule.store + "/" + rule.engine + "/" + rule.name);
        }
        cat.rules_.push_back(std::move(rule));
    }

    for (const auto& [type_name, phrases] : doc["policy_corpus"].items()) {
        auto dt = data_type_from(type_name);
        if (!dt) raise(Errc::UnknownDataType, type_name);
        if (!phrases.is_array()) raise(Errc::SchemaViolation, "policy_corpus." + type_name);
        for (const auto& phrase : phrases) {
            if (!phrase.is_string() || phrase.get<std::string>().empty()) {
                raise(Errc::SchemaViolation, "policy_corpus." + type_name + " phrase");
            }
            cat.corpus_[*dt].push_back(phrase.get<std::string>());
        }
    }
    for (DataType t : kAllDataTypes) {
        if (cat.corpus_[t].empty()) {
            raise(Errc::SchemaViolation,
                  std::string("policy_corpus missing phrases for ") + data_type_name(t));
        }
    }
    return cat;
}

SensitivityCatalog SensitivityCatalog::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::IoError, "cannot open catalog " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    return load(as_bytes(text));
}

std::vector<ApiRule> SensitivityCatalog::lookup(std::string_view store,
                                                std::string_view engine) const {
    std::string s = lower(store);
    std::string e = lower(engine);
    std::vector<ApiRule> out;
    for (const auto& rule : rules_) {
        std::string rs = lower(rule.store);
        std::string re = lower(rule.engine);
        bool store_ok = rs == "any" || rs == s;
        bool engine_ok = re == "any" || re == e;
        if (store_ok && engine_ok) out.push_back(rule);
    }
    return out;
}

std::string SensitivityCatalog::serialize() const {
    nlohmann::ordered_json doc;
    doc["api_rules"] = nlohmann::ordered_json::array();
    for (const auto& rule : rules_) {
        nlohmann::ordered_json item;
        item["store"] = rule.store;
        item["engine"] = rule.engine;
        item["data_type"] = data_type_name(rule.data_type);
        item["kind"] = rule_kind_name(rule.kind);
        item["name"] = rule.name;
        if (rule.guessed) item["guessed"] = true;
        doc["api_rules"].push_back(std::move(item));
    }
    doc["policy_corpus"] = nlohmann::ordered_json::object();
    for (const auto& [type, phrases] : corpus_) {
        doc["policy_corpus"][data_type_name(type)] = phrases;
    }
    return doc.dump(2);
}

} // namespace vraudit::catalog
