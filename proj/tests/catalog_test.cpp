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

#include <doctest.h>

#include "test_util.hpp"
#include "vraudit/catalog.hpp"

using namespace vraudit;
using catalog::DataType;
using catalog::RuleKind;
using catalog::SensitivityCatalog;

namespace {

SensitivityCatalog load_default() {
    return SensitivityCatalog::load_file(std::string(VRAUDIT_DATA_DIR) + "/catalog.json");
}

bool has_rule(const std::vector<catalog::ApiRule>& rules, DataType type, RuleKind kind,
              std::string_view name) {
    for (const auto& rule : rules) {
        if (rule.data_type == type && rule.kind == kind && rule.name == name) return true;
    }
    return false;
}

} // namespace

TEST_CASE("default catalog loads and exposes the table entries") {
    auto cat = load_default();
    auto pico_unity = cat.lookup("Pico", "Unity");
    CHECK(has_rule(pico_unity, DataType::Eye, RuleKind::Api, "UPvr_getEyeTrackingPos"));
    auto oculus_unity = cat.lookup("Oculus", "Unity");
    CHECK(has_rule(oculus_unity, DataType::Eye, RuleKind::Class, "OVREyeGaze"));
    auto oculus_unreal = cat.lookup("Oculus", "Unreal");
    CHECK(has_rule(oculus_unreal, DataType::Eye, RuleKind::Module, "OculusEyeTracker"));

    const auto& corpus = cat.policy_corpus();
    bool hand_pose = false;
    for (const auto& phrase : corpus.at(DataType::Hand)) {
        if (phrase == "Hand Pose Data" || phrase == "hand pose data") hand_pose = true;
    }
    CHECK(hand_pose);
}

TEST_CASE("lookup includes store=any rules and nothing else") {
    auto cat = load_default();
    auto pico_unreal = cat.lookup("Pico", "Unreal");
    CHECK(has_rule(pico_unreal, DataType::Eye, RuleKind::ConfigKey, "EnableEyeTracking"));
    CHECK_FALSE(has_rule(pico_unreal, DataType::Eye, RuleKind::Class, "OVREyeGaze"));
    // no Unity rules exist for Viveport, and the only any-store rule is Unreal
    CHECK(cat.lookup("Viveport", "Unity").empty());
}

TEST_CASE("store with no rules yields the empty set") {
    auto cat = SensitivityCatalog::load(testsupport::ascii_bytes(R"({
        "api_rules": [
          {"store": "Pico", "engine": "Unity", "data_type": "Eye", "kind": "api", "name": "E"}
        ],
        "policy_corpus": {"Body": ["b"], "Face": ["f"], "Eye": ["e"], "Hand": ["h"]}
    })"));
    CHECK(cat.lookup("Microsoft", "Unity").empty());
}

TEST_CASE("schema violations are typed") {
    CHECK(testsupport::thrown_code([] {
              SensitivityCatalog::load(testsupport::ascii_bytes("{\"api_rules\": []}"));
          }) == Errc::SchemaViolation);

    CHECK(testsupport::thrown_code([] {
              SensitivityCatalog::load(testsupport::ascii_bytes(R"({
                "api_rules": [{"store": "Pico", "engine": "Unity", "data_type": "Voice",
                               "kind": "api", "name": "X"}],
                "policy_corpus": {"Body": ["b"], "Face": ["f"], "Eye": ["e"], "Hand": ["h"]}
              })"));
          }) == Errc::UnknownDataType);

    CHECK(testsupport::thrown_code([] {
              SensitivityCatalog::load(testsupport::ascii_bytes(R"({
                "api_rules": [
                  {"store": "Pico", "engine": "Unity", "data_type": "Eye", "kind": "api", "name": "X"},
                  {"store": "Pico", "engine": "Unity", "data_type": "Hand", "kind": "api", "name": "X"}
                ],
                "policy_corpus": {"Body": ["b"], "Face": ["f"], "Eye": ["e"], "Hand": ["h"]}
              })"));
          }) == Errc::DuplicateRule);

    // a data type with no corpus phrases violates the catalog invariant
    CHECK(testsupport::thrown_code([] {
              SensitivityCatalog::load(testsupport::ascii_bytes(R"({
                "api_rules": [],
                "policy_corpus": {"Body": ["b"], "Face": ["f"], "Eye": ["e"]}
              })"));
          }) == Errc::SchemaViolation);
}

TEST_CASE("serialize then reload is semantically equal") {
    auto cat = load_default();
    std::string text = cat.serialize();
    auto again = SensitivityCatalog::load(as_bytes(text));
    REQUIRE(again.api_rules().size() == cat.api_rules().size());
    for (const auto& rule : cat.api_rules()) {
        bool found = false;
        for (const auto& other : again.api_rules()) {
            if (other.store == rule.store && other.engine == rule.engine &&
                other.data_type == rule.data_type && other.kind == rule.kind &&
                other.name == rule.name) {
                found = true;
            }
        }
        CAPTURE(rule.name);
        CHECK(found);
    }
    CHECK(again.policy_corpus() == cat.policy_corpus());
}
