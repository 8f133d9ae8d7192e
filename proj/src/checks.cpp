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

#include "vraudit/checks.hpp"

#include <algorithm>

namespace vraudit::compliance {

namespace {

std::string short_permission(const std::string& permission) {
    auto dot = permission.find_last_of('.');
    return dot == std::string::npos ? permission : permission.substr(dot + 1);
}

const std::map<std::string, std::string> kVendorPrefixes = {
        {"com.oculus.permission.", "Oculus"},
        {"com.picovr.permission.", "Pico"},
};

} // namespace

const char* behavioral_status_name(BehavioralProfile::Status s) {
    switch (s) {
    case BehavioralProfile::Status::Complete: return "Complete";
    case BehavioralProfile::Status::LacksFiles: return "LacksFiles";
    case BehavioralProfile::Status::Unsupported: return "Unsupported";
    }
    return "?";
}

const char* finding_code_name(FindingCode code) {
    switch (code) {
    case FindingCode::PermDiscrepancy: return "F_PERM_DISCREPANCY";
    case FindingCode::CrossPlatformPerm: return "F_CROSS_PLATFORM_PERM";
    case FindingCode::ChildInconsistency: return "F_CHILD_INCONSISTENCY";
    case FindingCode::ChildDiscrepancy: return "F_CHILD_DISCREPANCY";
    case FindingCode::BehaviorUndeclared: return "F_BEHAVIOR_UNDECLARED";
    case FindingCode::BehaviorVague: return "F_BEHAVIOR_VAGUE";
    case FindingCode::PolicyInvalid: return "F_POLICY_INVALID";
    case FindingCode::PolicyNotVr: return "F_POLICY_NOT_VR";
    case FindingCode::LinkBroken: return "F_LINK_BROKEN";
    case FindingCode::LangGap: return "F_LANG_GAP";
    }
    return "?";
}

const char* severity_name(Severity s) {
    switch (s) {
    case Severity::Info: return "Info";
    case Severity::Warn: return "Warn";
    case Severity::Violation: return "Violation";
    }
    return "?";
}

Severity severity_of(FindingCode code) {
    switch (code) {
    case FindingCode::PermDiscrepancy: return Severity::Violation;
    case FindingCode::CrossPlatformPerm: return Severity::Warn;
    case FindingCode::ChildInconsistency: return Severity::Warn;
    case FindingCode::ChildDiscrepancy: return Severity::Violation;
    case FindingCode::BehaviorUndeclared: return Severity::Violation;
    case FindingCode::BehaviorVague: return Severity::Warn;
    case FindingCode::PolicyInvalid: return Severity::Warn;
    case FindingCode::PolicyNotVr: return Severity::Info;
    case FindingCode::LinkBroken: return Severity::Warn;
    case FindingCode::LangGap: return Severity::Info;
    }
    return Severity::Info;
}

Finding make_finding(FindingCode code, std::string app_id, std::vector<std::string> evidence) {
    return Finding{code, std::move(app_id), std::move(evidence), severity_of(code)};
}

std::vector<Finding> check_permission_discrepancy(const BehavioralProfile& profile,
                                                  const AppRecord& record,
                                                  const std::set<std::string>& benign) {
    std::vector<Finding> findings;
    if (!record.declared_permissions) return findings; // store mandates no disclosure

    std::set<std::string> declared_short;
    for (const auto& p : *record.declared_permissions) declared_short.insert(short_permission(p));

    std::vector<std::string> undisclosed;
    for (const auto& permission : profile.manifest_permissions) {
        std::string name = short_permission(permission);
        if (benign.count(name)) continue;
        if (!declared_short.count(name)) undisclosed.push_back(permission);
    }
    if (!undisclosed.empty()) {
        findings.push_back(make_finding(FindingCode::PermDiscrepancy, profile.app_id,
                                        std::move(undisclosed)));
    }
    return findings;
}

std::vector<Finding> check_cross_platform_permissions(const BehavioralProfile& profile,
                                                      const AppRecord& record) {
    std::vector<Finding> findings;
    std::vector<std::string> foreign;
    for (const auto& permission : profile.manifest_permissions) {
        for (const auto& [prefix, owner] : kVendorPrefixes) {
            if (permission.rfind(prefix, 0) == 0 && record.store != owner) {
                foreign.push_back(permission + " on " + record.store);
            }
        }
    }
    if (!foreign.empty()) {
        findings.push_back(
                make_finding(FindingCode::CrossPlatformPerm, profile.app_id, std::move(foreign)));
    }
    return findings;
}

std::vector<Finding> check_children(const DeclarativeProfile& declarative) {
    std::vector<Finding> findings;
    const auto& rating = declarative.record.age_rating;
    if (!rating) return findings;

    bool has_children_clause =
            declarative.coverage && declarative.coverage->has(policy::Component::Children);

    if (rating->all && !has_children_clause) {
        findings.push_back(make_finding(
                FindingCode::ChildInconsistency, declarative.app_id,
                {"age rating 'all' but the policy has no children's data protection clause"}));
    }
    if (!rating->all && declarative.child_age && rating->min_age > *declarative.child_age) {
        findings.push_back(make_finding(
                FindingCode::ChildDiscrepancy, declarative.app_id,
                {"store age restriction " + std::to_string(rating->min_age) +
                 " exceeds policy age " + std::to_string(*declarative.child_age)}));
    }
    return findings;
}

std::vector<Finding> check_behavior_declaration(const BehavioralProfile& behavioral,
                                                const DeclarativeProfile& declarative) {
    std::vector<Finding> findings;
    if (behavioral.analysis_status != BehavioralProfile::Status::Complete) return findings;

    std::set<catalog::DataType> accessed;
    std::map<catalog::DataType, std::string> first_evidence;
    for (const auto& access : behavioral.accesses) {
        accessed.insert(access.data_type);
        first_evidence.emplace(access.data_type, access.api_name);
    }

    bool declared_vague = declarative.declared && declarative.declared->vague;
    for (catalog::DataType type : accessed) {
        bool declared_specific =
                declarative.declared && declarative.declared->specific.count(type);
        if (declared_specific) continue;
        std::string evidence = std::string(catalog::data_type_name(type)) + " via " +
                               first_evidence[type];
        if (declared_vague) {
            findings.push_back(make_finding(FindingCode::BehaviorVague, behavioral.app_id,
                                            {evidence + " (policy uses vague wording only)"}));
        } else {
            findings.push_back(make_finding(FindingCode::BehaviorUndeclared, behavioral.app_id,
                                            {evidence + " (not declared in policy)"}));
        }
    }
    return findings;
}

std::vector<Finding> check_policy_findings(const DeclarativeProfile& declarative) {
    std::vector<Finding> findings;
    if (!declarative.policy_text_available) {
        findings.push_back(make_finding(FindingCode::PolicyInvalid, declarative.app_id,
                                        {"no policy text available"}));
    } else if (declarative.validity && *declarative.validity != policy::Validity::Valid) {
        findings.push_back(make_finding(FindingCode::PolicyInvalid, declarative.app_id,
                                        {policy::validity_name(*declarative.validity)}));
    }
    if (declarative.specificity && !declarative.specificity->is_vr_specific) {
        findings.push_back(make_finding(FindingCode::PolicyNotVr, declarative.app_id,
                                        {"no VR term or app name in policy"}));
    }
    if (declarative.link_status &&
        declarative.link_status->status.kind != web::ProbeStatusKind::Ok) {
        findings.push_back(make_finding(
                FindingCode::LinkBroken, declarative.app_id,
                {declarative.link_status->url + " -> " +
                 web::probe_status_name(declarative.link_status->status)}));
    }
    if (declarative.language_coverage) {
        std::vector<std::string> missing;
        for (const auto& [lang, coverage] : *declarative.language_coverage) {
            if (coverage == web::LanguageCoverage::Missing) missing.push_back(lang);
        }
        if (!missing.empty()) {
            findings.push_back(
                    make_finding(FindingCode::LangGap, declarative.app_id, std::move(missing)));
        }
    }
    return findings;
}

} // namespace vraudit::compliance
