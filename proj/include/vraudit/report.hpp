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
#include <string>
#include <vector>

#include <json.hpp>

#include "vraudit/checks.hpp"

namespace vraudit::compliance {

struct AppAudit {
    BehavioralProfile behavioral;
    DeclarativeProfile declarative;
    std::vector<Finding> findings;
};

/// Half-up rounding to one decimal, the convention for every percentage in
/// the report.
double percent_1dp(long long numerator, long long denominator);

/// Store x engine data-access row (upper/lower table layout: apps accessing
/// a type, and of those, apps declaring it specifically).
struct AccessCell {
    long long access = 0;
    long long declared = 0;
};

struct AccessRow {
    std::string store;
    std::string engine; // "Unity" / "Unreal"
    long long apps = 0;
    long long lacks_files = 0;
    std::map<catalog::DataType, AccessCell> cells;
};

struct ChildrenRow {
    std::string store;
    std::string category;
    long long apps = 0;
    long long inconsistency = 0;
    long long discrepancy = 0;
};

struct PolicyStatusRow {
    std::string store;
    long long apps = 0;
    long long policy_available = 0;
    long long valid = 0;
    long long too_short = 0;
    long long store_generic = 0;
    long long vr_specific = 0;
    std::map<std::string, long long> link_status; // status name -> count
};

struct StoreReport {
    std::vector<AccessRow> access_rows;       // ordered store, engine
    std::vector<ChildrenRow> children_rows;   // ordered store, category
    std::vector<PolicyStatusRow> policy_rows; // ordered store
    long long total_apps = 0;
    std::map<std::string, long long> findings_by_code;
};

/// Order-independent fold over per-app audits; raises EmptyRunSet on none.
StoreReport aggregate_report(const std::vector<AppAudit>& audits);

/// Machine format, schema "report_v1". Deterministic: apps sorted by app_id,
/// no timestamps.
nlohmann::ordered_json report_to_json(const std::vector<AppAudit>& audits,
                                      const StoreReport& report);

std::string render_text_tables(const StoreReport& report);
std::string render_csv(const std::vector<AppAudit>& audits);

} // namespace vraudit::compliance
