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

#include "vraudit/profiles.hpp"

namespace vraudit::compliance {

enum class FindingCode {
    PermDiscrepancy,
    CrossPlatformPerm,
    ChildInconsistency,
    ChildDiscrepancy,
    BehaviorUndeclared,
    BehaviorVague,
    PolicyInvalid,
    PolicyNotVr,
    LinkBroken,
    LangGap,
};

enum class Severity { Info, Warn, Violation };

const char* finding_code_name(FindingCode code); // F_PERM_DISCREPANCY, ...
const char* severity_name(Severity s);
Severity severity_of(FindingCode code); // fixed code -> severity map

struct Finding {
    FindingCode code;
    std::string app_id;
    std::vector<std::string> evidence; // never empty
    Severity severity;
};

Finding make_finding(FindingCode code, std::string app_id, std::vector<std::string> evidence);

/// Manifest permissions the store page does not declare. Skipped entirely
/// when the record carries no permission disclosure; short names compare
/// against the last dotted segment; `benign` (short names) is excluded.
std::vector<Finding> check_permission_discrepancy(const BehavioralProfile& profile,
                                                  const AppRecord& record,
                                                  const std::set<std::string>& benign);

/// Vendor-prefixed permissions (com.oculus.permission.*, com.picovr.permission.*)
/// on a store they do not belong to.
std::vector<Finding> check_cross_platform_permissions(const BehavioralProfile& profile,
                                                      const AppRecord& record);

/// I: all-ages app without a CHILDREN clause. D: store age restriction above
/// the policy's stated age. Unknown ages never produce D.
std::vector<Finding> check_children(const DeclarativeProfile& declarative);

/// Accessed data types against declared ones. Undeclared access is a
/// violation; access covered only by vague wording is a warning;
/// over-declaration is fine.
std::vector<Finding> check_behavior_declaration(const BehavioralProfile& behavioral,
                                                const DeclarativeProfile& declarative);

/// Declarative-side findings: invalid policy, missing VR specificity, broken
/// policy link, claimed-language gaps.
std::vector<Finding> check_policy_findings(const DeclarativeProfile& declarative);

} // namespace vraudit::compliance
