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

#include "vraudit/bytes.hpp"

namespace vraudit::catalog {

/// The four VR-specific privacy-sensitive data categories.
enum class DataType { Body, Face, Eye, Hand };

const char* data_type_name(DataType t);
std::optional<DataType> data_type_from(std::string_view name);
inline constexpr DataType kAllDataTypes[] = {DataType::Body, DataType::Face, DataType::Eye,
                                             DataType::Hand};

/// What a rule's name denotes in the build artifacts.
enum class RuleKind { Api, Class, Module, ConfigKey };

const char* rule_kind_name(RuleKind k);
std::optional<RuleKind> rule_kind_from(std::string_view name);

/// Maps one store/engine-specific identifier to a sensitive data category.
/// `store` and `engine` may be "any". `guessed` marks entries whose kind was
/// assigned by naming convention rather than vendor documentation.
struct ApiRule {
    std::string store;
    std::string engine;
    DataType data_type;
    RuleKind kind;
    std::string name;
    bool guessed = false;
};

/// The store×engine×data-type rule table plus the phrase corpus used to spot
/// declared data types in privacy policies. Immutable after load and shared
/// read-only across workers.
class SensitivityCatalog {
public:
    static SensitivityCatalog load(BytesView json_text);
    static SensitivityCatalog load_file(const std::string& path);

    const std::vector<ApiRule>& api_rules() const { return rules_; }
    const std::map<DataType, std::vector<std::string>>& policy_corpus() const { return corpus_; }

    /// All rules for (store, engine), including rules whose store or engine
    /// is "any". Matching is case-insensitive on store/engine.
    std::vector<ApiRule> lookup(std::string_view store, std::string_view engine) const;

    std::string serialize() const;

private:
    std::vector<ApiRule> rules_;
    std::map<DataType, std::vector<std::string>> corpus_;
};

} // namespace vraudit::catalog
