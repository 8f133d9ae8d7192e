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

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vraudit/components.hpp"
#include "vraudit/declared_types.hpp"
#include "vraudit/engine.hpp"
#include "vraudit/evidence.hpp"
#include "vraudit/readability.hpp"
#include "vraudit/records.hpp"
#include "vraudit/web_probe.hpp"

namespace vraudit::compliance {

/// What the app actually does: requested permissions and observed access to
/// VR-sensitive data. `accesses` is populated only for Complete analyses;
/// LacksFiles mirrors the audit notion of an apk missing the engine artifacts
/// the analysis needs.
struct BehavioralProfile {
    enum class Status { Complete, LacksFiles, Unsupported };

    std::string app_id;
    apk::EngineKind engine = apk::EngineKind::Unknown;
    std::set<std::string> manifest_permissions;
    std::vector<AccessEvidence> accesses;
    Status analysis_status = Status::Unsupported;
    std::string package_name;
    std::vector<std::string> notes; // parse mode, heuristic flags, skip reasons
};

const char* behavioral_status_name(BehavioralProfile::Status s);

/// What the app claims: the store record plus policy analysis. Optional
/// fields stay empty when no policy text is available.
struct DeclarativeProfile {
    std::string app_id;
    AppRecord record;
    bool policy_text_available = false;
    std::optional<policy::Validity> validity;
    std::optional<policy::SpecificityResult> specificity;
    std::optional<policy::ReadabilityReport> readability;
    std::optional<policy::ComponentCoverage> coverage;
    std::optional<policy::DeclaredSet> declared;
    std::optional<int> child_age;
    std::optional<web::ProbeResult> link_status;
    std::optional<std::map<std::string, web::LanguageCoverage>> language_coverage;
};

} // namespace vraudit::compliance
