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

#include <algorithm>

#include "test_util.hpp"
#include "vraudit/report.hpp"

using namespace vraudit;
using namespace vraudit::compliance;

namespace {

AppRecord record(const std::string& id, const std::string& store) {
    AppRecord r;
    r.app_id = id;
    r.store = store;
    r.name = "App " + id;
    return r;
}

BehavioralProfile complete_profile(const std::string& id,
                                   std::set<std::string> permissions = {},
                                   std::vector<AccessEvidence> accesses = {}) {
    BehavioralProfile profile;
    profile.app_id = id;
    profile.engine = apk::EngineKind::UnityIl2cpp;
    profile.manifest_permissions = std::move(permissions);
    profile.accesses = std::move(accesses);
    profile.analysis_status = BehavioralProfile::Status::Complete;
    return profile;
}

DeclarativeProfile declarative(const std::string& id, AppRecord rec) {
    DeclarativeProfile d;
    d.app_id = id;
    d.record = std::move(rec);
    d.policy_text_available = true;
    d.coverage = policy::ComponentCoverage{};
    d.declared = policy::DeclaredSet{};
    return d;
}

std::vector<FindingCode> codes(const std::vector<Finding>& findings) {
    std::vector<FindingCode> out;
    for (const auto& f : findings) out.push_back(f.code);
    return out;
}

} // namespace

TEST_CASE("record ingestion validates and round-trips") {
    const char* json = R"([
      {"app_id": "a1", "store": "Pico", "name": "Alpha", "age_rating": "all",
       "category": "Action", "declared_permissions": ["CAMERA"],
       "supported_languages": ["en", "fr"], "policy_url": "https://x/p",
       "play_style": "standing", "custom_field": {"nested": true}},
      {"app_id": "a2", "store": "Oculus", "name": "Beta", "age_rating": 13}
    ])";
    auto records = ingest_records(testsupport::ascii_bytes(json));
    REQUIRE(records.size() == 2);
    CHECK(records[0].age_rating->all);
    CHECK(records[0].declared_permissions->count("CAMERA") == 1);
    CHECK(records[0].extras.contains("custom_field"));
    CHECK(records[1].age_rating->min_age == 13);
    CHECK_FALSE(records[1].declared_permissions.has_value());

    auto again = ingest_records(as_bytes(serialize_records(records)));
    REQUIRE(again.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(again[i].app_id == records[i].app_id);
        CHECK(again[i].store == records[i].store);
        CHECK(again[i].age_rating == records[i].age_rating);
        CHECK(again[i].declared_permissions == records[i].declared_permissions);
        CHECK(again[i].supported_languages == records[i].supported_languages);
        CHECK(again[i].policy_url == records[i].policy_url);
        CHECK(again[i].extras == records[i].extras);
    }
}

TEST_CASE("unknown stores and schema violations are typed") {
    CHECK(testsupport::thrown_code([] {
              ingest_records(testsupport::ascii_bytes(
                      R"([{"app_id": "x", "store": "AppStoreX", "name": "n"}])"));
          }) == Errc::UnknownStore);
    CHECK(testsupport::thrown_code([] {
              ingest_records(testsupport::ascii_bytes(R"([{"app_id": "x", "store": "Pico"}])"));
          }) == Errc::SchemaViolation);
    CHECK(testsupport::thrown_code([] {
              ingest_records(testsupport::ascii_bytes(R"({"not": "an array"})"));
          }) == Errc::SchemaViolation);
}

TEST_CASE("permission discrepancy against the store page") {
    auto rec = record("a", "Pico");
    rec.declared_permissions = std::set<std::string>{};
    auto profile = complete_profile("a", {"android.permission.CAMERA",
                                          "android.permission.INTERNET"});
    auto findings = check_permission_discrepancy(profile, rec, {"INTERNET"});
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].code == FindingCode::PermDiscrepancy);
    REQUIRE(findings[0].evidence.size() == 1);
    CHECK(findings[0].evidence[0] == "android.permission.CAMERA");

    // manifest within declared: nothing
    rec.declared_permissions = std::set<std::string>{"CAMERA"};
    CHECK(check_permission_discrepancy(profile, rec, {"INTERNET"}).empty());

    // benign-only manifest: nothing
    auto benign_only = complete_profile("a", {"android.permission.INTERNET"});
    rec.declared_permissions = std::set<std::string>{};
    CHECK(check_permission_discrepancy(benign_only, rec, {"INTERNET"}).empty());

    // no disclosure mandated: the check is skipped entirely
    rec.declared_permissions.reset();
    CHECK(check_permission_discrepancy(profile, rec, {"INTERNET"}).empty());
}

TEST_CASE("cross-platform permission detection") {
    auto pico = record("p", "Pico");
    auto finding = check_cross_platform_permissions(
            complete_profile("p", {"com.oculus.permission.HAND_TRACKING"}), pico);
    REQUIRE(finding.size() == 1);
    CHECK(finding[0].code == FindingCode::CrossPlatformPerm);

    auto oculus = record("o", "Oculus");
    CHECK(check_cross_platform_permissions(
                  complete_profile("o", {"com.oculus.permission.EYE_TRACKING"}), oculus)
                  .empty());
    CHECK(check_cross_platform_permissions(
                  complete_profile("p", {"android.permission.CAMERA"}), pico)
                  .empty());
}

TEST_CASE("children inconsistency and discrepancy") {
    auto rec = record("c", "Pico");
    rec.age_rating = AgeRating{true, 0};
    auto d = declarative("c", rec);
    auto found = check_children(d);
    REQUIRE(found.size() == 1);
    CHECK(found[0].code == FindingCode::ChildInconsistency);

    d.coverage->present.insert(policy::Component::Children);
    CHECK(check_children(d).empty());

    // store rating 13 vs policy saying 11
    d.record.age_rating = AgeRating{false, 13};
    d.child_age = 11;
    auto disc = check_children(d);
    REQUIRE(disc.size() == 1);
    CHECK(disc[0].code == FindingCode::ChildDiscrepancy);

    d.child_age = 13;
    CHECK(check_children(d).empty()); // equal is consistent

    d.child_age.reset();
    CHECK(check_children(d).empty()); // unknown policy age: no D

    d.record.age_rating.reset();
    CHECK(check_children(d).empty()); // unknown rating: nothing at all
}

TEST_CASE("behavior-declaration semantics") {
    auto rec = record("b", "Pico");
    auto d = declarative("b", rec);
    auto accesses = std::vector<AccessEvidence>{
            {catalog::DataType::Eye, "GetEyeTrackingData", {"GetEyeTrackingData"}}};

    d.declared->specific = {catalog::DataType::Eye};
    CHECK(check_behavior_declaration(complete_profile("b", {}, accesses), d).empty());

    d.declared->specific = {};
    d.declared->vague = false;
    auto undeclared = check_behavior_declaration(complete_profile("b", {}, accesses), d);
    REQUIRE(undeclared.size() == 1);
    CHECK(undeclared[0].code == FindingCode::BehaviorUndeclared);
    CHECK(undeclared[0].severity == Severity::Violation);

    d.declared->vague = true;
    auto vague = check_behavior_declaration(complete_profile("b", {}, accesses), d);
    REQUIRE(vague.size() == 1);
    CHECK(vague[0].code == FindingCode::BehaviorVague);
    CHECK(vague[0].severity == Severity::Warn);

    // over-declaration is fine
    d.declared->specific = {catalog::DataType::Eye, catalog::DataType::Hand};
    d.declared->vague = false;
    CHECK(check_behavior_declaration(complete_profile("b", {}, accesses), d).empty());

    // incomplete analyses never produce behavior findings
    auto lacking = complete_profile("b", {}, accesses);
    lacking.analysis_status = BehavioralProfile::Status::LacksFiles;
    lacking.accesses.clear();
    d.declared->specific = {};
    CHECK(check_behavior_declaration(lacking, d).empty());
}

TEST_CASE("declarative-side findings") {
    auto rec = record("d", "Microsoft");
    auto d = declarative("d", rec);
    d.validity = policy::Validity::TooShort;
    d.specificity = policy::SpecificityResult{false, {}};
    auto found = check_policy_findings(d);
    auto cs = codes(found);
    CHECK(std::count(cs.begin(), cs.end(), FindingCode::PolicyInvalid) == 1);
    CHECK(std::count(cs.begin(), cs.end(), FindingCode::PolicyNotVr) == 1);

    d.validity = policy::Validity::Valid;
    d.specificity = policy::SpecificityResult{true, {"immersive"}};
    d.link_status = web::ProbeResult{"https://x", {web::ProbeStatusKind::Code404, 0}, 12, ""};
    d.language_coverage = std::map<std::string, web::LanguageCoverage>{
            {"en", web::LanguageCoverage::Covered}, {"fr", web::LanguageCoverage::Missing}};
    found = check_policy_findings(d);
    cs = codes(found);
    CHECK(std::count(cs.begin(), cs.end(), FindingCode::LinkBroken) == 1);
    CHECK(std::count(cs.begin(), cs.end(), FindingCode::LangGap) == 1);

    DeclarativeProfile missing;
    missing.app_id = "m";
    missing.record = record("m", "Viveport");
    auto none = check_policy_findings(missing);
    REQUIRE(none.size() == 1);
    CHECK(none[0].code == FindingCode::PolicyInvalid);
}

TEST_CASE("aggregate_report tabulates access, children and policy tables") {
    std::vector<AppAudit> audits;

    // app 1: Pico Unity, accesses Eye, declares Eye
    AppAudit a1;
    a1.behavioral = complete_profile(
            "a1", {}, {{catalog::DataType::Eye, "GetEyeTrackingData", {"GetEyeTrackingData"}}});
    auto rec1 = record("a1", "Pico");
    rec1.category = "Action";
    rec1.age_rating = AgeRating{false, 13};
    a1.declarative = declarative("a1", rec1);
    a1.declarative.validity = policy::Validity::Valid;
    a1.declarative.declared->specific = {catalog::DataType::Eye};
    audits.push_back(a1);

    // app 2: Pico Unity, no accesses, short policy, child inconsistency
    AppAudit a2;
    a2.behavioral = complete_profile("a2");
    auto rec2 = record("a2", "Pico");
    rec2.category = "Action";
    rec2.age_rating = AgeRating{true, 0};
    a2.declarative = declarative("a2", rec2);
    a2.declarative.validity = policy::Validity::TooShort;
    a2.findings.push_back(make_finding(FindingCode::ChildInconsistency, "a2", {"no clause"}));
    audits.push_back(a2);

    auto report = aggregate_report(audits);
    REQUIRE(report.access_rows.size() == 1);
    const auto& row = report.access_rows[0];
    CHECK(row.store == "Pico");
    CHECK(row.engine == "Unity");
    CHECK(row.apps == 2);
    CHECK(row.lacks_files == 0);
    CHECK(row.cells.at(catalog::DataType::Eye).access == 1);
    CHECK(row.cells.at(catalog::DataType::Eye).declared == 1);

    REQUIRE(report.children_rows.size() == 1);
    CHECK(report.children_rows[0].apps == 2);
    CHECK(report.children_rows[0].inconsistency == 1);

    REQUIRE(report.policy_rows.size() == 1);
    CHECK(report.policy_rows[0].valid == 1);
    CHECK(report.policy_rows[0].too_short == 1);

    auto json = report_to_json(audits, report);
    CHECK(json["schema"] == "report_v1");
    CHECK(json["access_compliance"][0]["Eye"]["declared_pct"] == 100.0);
}

TEST_CASE("empty run set is an error") {
    CHECK(testsupport::thrown_code([] { aggregate_report({}); }) == Errc::EmptyRunSet);
}

TEST_CASE("percent rounding is half-up to one decimal") {
    CHECK(percent_1dp(1, 3) == 33.3);
    CHECK(percent_1dp(2, 3) == 66.7);
    CHECK(percent_1dp(1, 0) == 0.0); // zero denominator guard
    CHECK(percent_1dp(1, 8) == 12.5);
    CHECK(percent_1dp(25, 1000) == 2.5);
    CHECK(percent_1dp(1, 16) == 6.3); // 6.25 rounds half-up
}
