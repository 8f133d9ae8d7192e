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

#include <filesystem>
#include <optional>
#include <string>

#include "vraudit/report.hpp"

namespace vraudit::pipeline {

/// Rule data shared read-only across workers: the sensitivity catalog,
/// component keyword sets, language seeds and audit defaults.
struct DataContext {
    catalog::SensitivityCatalog sensitivity;
    policy::ComponentRules component_rules;
    policy::LanguageDetector language_detector;
    std::set<std::string> benign_permissions;
    std::set<std::string> store_policy_url_prefixes;

    /// `catalog_override` (CLI flag or AUDITOR_CATALOG) replaces
    /// `<data_dir>/catalog.json`.
    static DataContext load(const std::string& data_dir, const std::string& catalog_override = "");
};

/// Full static analysis of one .apk. `store_hint` narrows catalog rules to
/// one store; empty means any store's rules may fire.
compliance::BehavioralProfile analyze_apk_file(const std::filesystem::path& path,
                                               const DataContext& data,
                                               const std::string& store_hint = "");

struct PolicyAnalysis {
    policy::Validity validity = policy::Validity::TooShort;
    policy::SpecificityResult specificity;
    std::optional<policy::ReadabilityReport> readability;
    policy::ComponentCoverage coverage;
    policy::DeclaredSet declared;
    std::optional<int> child_age;
    std::size_t word_count = 0;
    std::size_t sentence_count = 0;
    std::string language = "Unknown";
};

PolicyAnalysis analyze_policy_text(const std::string& text,
                                   const std::optional<std::string>& source_url,
                                   const DataContext& data, const std::string& app_name = "");

struct AuditConfig {
    std::string records_path;
    std::string apk_dir;
    std::string policy_dir;
    std::string output_path = "report.json";
    std::string format = "json"; // json | table | csv
    bool live_network = false;
    int timeout_ms = 10000;
    int workers = 4;
};

struct AuditOutcome {
    std::vector<compliance::AppAudit> audits;
    compliance::StoreReport report;
};

/// The end-to-end run: records + apks + policies joined by filename stem,
/// analyzed with a bounded worker pool. Output is a pure function of inputs
/// and config; worker count only changes the runtime. `client` may be null
/// unless `live_network` is set.
AuditOutcome run_audit(const AuditConfig& config, const DataContext& data,
                       web::HttpClient* client);

/// Writes the report_v1 JSON to `output_path`, plus `<stem>.txt` or
/// `<stem>.csv` for the table/csv formats.
void write_outputs(const AuditConfig& config, const AuditOutcome& outcome);

} // namespace vraudit::pipeline
