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

#include "vraudit/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace vraudit::compliance {

namespace {

std::string engine_family(apk::EngineKind kind) {
    switch (kind) {
    case apk::EngineKind::UnityIl2cpp:
    case apk::EngineKind::UnityMono:
        return "Unity";
    case apk::EngineKind::Unreal:
        return "Unreal";
    case apk::EngineKind::Unknown:
        return "Unknown";
    }
    return "Unknown";
}

nlohmann::ordered_json evidence_json(const std::vector<AccessEvidence>& accesses) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& access : accesses) {
        nlohmann::ordered_json item;
        item["data_type"] = catalog::data_type_name(access.data_type);
        item["api_name"] = access.api_name;
        item["path"] = access.path;
        out.push_back(std::move(item));
    }
    return out;
}

nlohmann::ordered_json findings_json(const std::vector<Finding>& findings) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& finding : findings) {
        nlohmann::ordered_json item;
        item["code"] = finding_code_name(finding.code);
        item["severity"] = severity_name(finding.severity);
        item["evidence"] = finding.evidence;
        out.push_back(std::move(item));
    }
    return out;
}

} // namespace

double percent_1dp(long long numerator, long long denominator) {
    if (denominator == 0) return 0.0;
    double pct = 100.0 * static_cast<double>(numerator) / static_cast<double>(denominator);
    return std::floor(pct * 10.0 + 0.5) / 10.0;
}

StoreReport aggregate_report(const std::vector<AppAudit>& audits) {
    if (audits.empty()) raise(Errc::EmptyRunSet, "no audits to aggregate");

    StoreReport report;
    report.total_apps = static_cast<long long>(audits.size());

    std::map<std::pair<std::string, std::string>, AccessRow> access;
    std::map<std::pair<std::string, std::string>, ChildrenRow> children;
    std::map<std::string, PolicyStatusRow> policy;

    for (const auto& audit : audits) {
        const auto& store = audit.declarative.record.store;
        const auto& behavioral = audit.behavioral;

        std::string engine = engine_family(behavioral.engine);
        if (engine != "Unknown") {
            auto& row = access[{store, engine}];
            row.store = store;
            row.engine = engine;
            ++row.apps;
            if (behavioral.analysis_status == BehavioralProfile::Status::LacksFiles) {
                ++row.lacks_files;
            }
            std::set<catalog::DataType> accessed;
            for (const auto& ev : behavioral.accesses) accessed.insert(ev.data_type);
            for (catalog::DataType type : accessed) {
                auto& cell = row.cells[type];
                ++cell.access;
                if (audit.declarative.declared && audit.declarative.declared->specific.count(type)) {
                    ++cell.declared;
                }
            }
        }

        if (!audit.declarative.record.category.empty()) {
            auto& row = children[{store, audit.declarative.record.category}];
            row.store = store;
            row.category = audit.declarative.record.category;
            ++row.apps;
            for (const auto& finding : audit.findings) {
                if (finding.code == FindingCode::ChildInconsistency) ++row.inconsistency;
                if (finding.code == FindingCode::ChildDiscrepancy) ++row.discrepancy;
            }
        }

        auto& prow = policy[store];
        prow.store = store;
        ++prow.apps;
        if (audit.declarative.policy_text_available) ++prow.policy_available;
        if (audit.declarative.validity) {
            switch (*audit.declarative.validity) {
            case policy::Validity::Valid: ++prow.valid; break;
            case policy::Validity::TooShort: ++prow.too_short; break;
            case policy::Validity::StoreGeneric: ++prow.store_generic; break;
            }
        }
        if (audit.declarative.specificity && audit.declarative.specificity->is_vr_specific) {
            ++prow.vr_specific;
        }
        if (audit.declarative.link_status) {
            ++prow.link_status[web::probe_status_name(audit.declarative.link_status->status)];
        }

        for (const auto& finding : audit.findings) {
            ++report.findings_by_code[finding_code_name(finding.code)];
        }
    }

    for (auto& [key, row] : access) report.access_rows.push_back(std::move(row));
    for (auto& [key, row] : children) report.children_rows.push_back(std::move(row));
    for (auto& [key, row] : policy) report.policy_rows.push_back(std::move(row));
    return report;
}

nlohmann::ordered_json report_to_json(const std::vector<AppAudit>& audits,
                                      const StoreReport& report) {
    nlohmann::ordered_json doc;
    doc["schema"] = "report_v1";
    doc["total_apps"] = report.total_apps;

    std::vector<const AppAudit*> ordered;
    ordered.reserve(audits.size());
    for (const auto& audit : audits) ordered.push_back(&audit);
    std::sort(ordered.begin(), ordered.end(), [](const AppAudit* a, const AppAudit* b) {
        return a->behavioral.app_id < b->behavioral.app_id;
    });

    auto apps = nlohmann::ordered_json::array();
    for (const AppAudit* audit : ordered) {
        nlohmann::ordered_json app;
        app["app_id"] = audit->behavioral.app_id;
        app["store"] = audit->declarative.record.store;
        app["engine"] = apk::engine_name(audit->behavioral.engine);
        app["analysis_status"] = behavioral_status_name(audit->behavioral.analysis_status);
        app["manifest_permissions"] = audit->behavioral.manifest_permissions;
        app["accesses"] = evidence_json(audit->behavioral.accesses);
        if (!audit->behavioral.notes.empty()) app["notes"] = audit->behavioral.notes;

        nlohmann::ordered_json pol;
        pol["available"] = audit->declarative.policy_text_available;
        if (audit->declarative.validity) {
            pol["validity"] = policy::validity_name(*audit->declarative.validity);
        }
        if (audit->declarative.specificity) {
            pol["vr_specific"] = audit->declarative.specificity->is_vr_specific;
            pol["specificity_hits"] = audit->declarative.specificity->hits;
        }
        if (audit->declarative.readability) {
            const auto& r = *audit->declarative.readability;
            pol["readability"] = {{"ari", r.ari},       {"fres", r.fres},
                                  {"lix", r.lix},       {"lpw", r.lpw},
                                  {"spw", r.spw},       {"wps", r.wps},
                                  {"sc", r.sc},         {"wc", r.wc},
                                  {"rt_seconds", r.rt_seconds}, {"st_seconds", r.st_seconds}};
        }
        if (audit->declarative.coverage) {
            auto comps = nlohmann::ordered_json::array();
            for (policy::Component c : policy::kAllComponents) {
                if (audit->declarative.coverage->has(c)) comps.push_back(policy::component_name(c));
            }
            pol["components"] = std::move(comps);
        }
        if (audit->declarative.declared) {
            auto specific = nlohmann::ordered_json::array();
            for (catalog::DataType t : audit->declarative.declared->specific) {
                specific.push_back(catalog::data_type_name(t));
            }
            pol["declared_specific"] = std::move(specific);
            pol["declared_vague"] = audit->declarative.declared->vague;
        }
        if (audit->declarative.child_age) pol["child_age"] = *audit->declarative.child_age;
        if (audit->declarative.link_status) {
            pol["link_status"] = web::probe_status_name(audit->declarative.link_status->status);
        } else {
            pol["link_status_note"] = "offline run; links not probed";
        }
        if (audit->declarative.language_coverage) {
            nlohmann::ordered_json langs;
            for (const auto& [lang, cov] : *audit->declarative.language_coverage) {
                langs[lang] = cov == web::LanguageCoverage::Covered ? "Covered" : "Missing";
            }
            pol["language_coverage"] = std::move(langs);
        }
        app["policy"] = std::move(pol);
        app["findings"] = findings_json(audit->findings);
        apps.push_back(std::move(app));
    }
    doc["apps"] = std::move(apps);

    auto access = nlohmann::ordered_json::array();
    for (const auto& row : report.access_rows) {
        nlohmann::ordered_json r;
        r["store"] = row.store;
        r["engine"] = row.engine;
        r["apps"] = row.apps;
        r["lacks_files"] = row.lacks_files;
        for (catalog::DataType type : catalog::kAllDataTypes) {
            auto it = row.cells.find(type);
            AccessCell cell = it == row.cells.end() ? AccessCell{} : it->second;
            nlohmann::ordered_json c;
            c["access"] = cell.access;
            c["access_denominator"] = row.apps;
            c["access_pct"] = percent_1dp(cell.access, row.apps);
            c["declared"] = cell.declared;
            c["declared_denominator"] = cell.access;
            c["declared_pct"] = percent_1dp(cell.declared, cell.access);
            r[catalog::data_type_name(type)] = std::move(c);
        }
        access.push_back(std::move(r));
    }
    doc["access_compliance"] = std::move(access);

    auto kids = nlohmann::ordered_json::array();
    for (const auto& row : report.children_rows) {
        nlohmann::ordered_json r;
        r["store"] = row.store;
        r["category"] = row.category;
        r["apps"] = row.apps;
        r["inconsistency"] = row.inconsistency;
        r["inconsistency_pct"] = percent_1dp(row.inconsistency, row.apps);
        r["discrepancy"] = row.discrepancy;
        r["discrepancy_pct"] = percent_1dp(row.discrepancy, row.apps);
        kids.push_back(std::move(r));
    }
    doc["children"] = std::move(kids);

    auto pol = nlohmann::ordered_json::array();
    for (const auto& row : report.policy_rows) {
        nlohmann::ordered_json r;
        r["store"] = row.store;
        r["apps"] = row.apps;
        r["policy_available"] = row.policy_available;
        r["valid"] = row.valid;
        r["too_short"] = row.too_short;
        r["store_generic"] = row.store_generic;
        r["vr_specific"] = row.vr_specific;
        r["vr_specific_pct"] = percent_1dp(row.vr_specific, row.apps);
        r["link_status"] = row.link_status;
        pol.push_back(std::move(r));
    }
    doc["policy_status"] = std::move(pol);
    doc["findings_by_code"] = report.findings_by_code;
    return doc;
}

std::string render_text_tables(const StoreReport& report) {
    std::ostringstream out;
    auto line = [&](int n) {
        for (int i = 0; i < n; ++i) out << '-';
        out << "\n";
    };

    out << "Access to VR-specific data (per store and engine)\n";
    line(78);
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%-12s %-7s %5s %4s %15s %15s %15s %15s\n", "Store", "Engine",
                  "Apps", "LF", "Body", "Face", "Eye", "Hand");
    out << buf;
    for (const auto& row : report.access_rows) {
        auto cell = [&](catalog::DataType t) {
            auto it = row.cells.find(t);
            AccessCell c = it == row.cells.end() ? AccessCell{} : it->second;
            char tmp[64];
            std::snprintf(tmp, sizeof(tmp), "%lld/%lld decl %lld", c.access, row.apps, c.declared);
            return std::string(tmp);
        };
        std::snprintf(buf, sizeof(buf), "%-12s %-7s %5lld %4lld %15s %15s %15s %15s\n",
                      row.store.c_str(), row.engine.c_str(), row.apps, row.lacks_files,
                      cell(catalog::DataType::Body).c_str(), cell(catalog::DataType::Face).c_str(),
                      cell(catalog::DataType::Eye).c_str(), cell(catalog::DataType::Hand).c_str());
        out << buf;
    }

    out << "\nChildren protection (I: inconsistency, D: discrepancy)\n";
    line(78);
    std::snprintf(buf, sizeof(buf), "%-12s %-14s %5s %5s %7s %5s %7s\n", "Store", "Category",
                  "Apps", "I", "I%", "D", "D%");
    out << buf;
    for (const auto& row : report.children_rows) {
        std::snprintf(buf, sizeof(buf), "%-12s %-14s %5lld %5lld %6.1f%% %5lld %6.1f%%\n",
                      row.store.c_str(), row.category.c_str(), row.apps, row.inconsistency,
                      percent_1dp(row.inconsistency, row.apps), row.discrepancy,
                      percent_1dp(row.discrepancy, row.apps));
        out << buf;
    }

    out << "\nPolicy status\n";
    line(78);
    std::snprintf(buf, sizeof(buf), "%-12s %5s %6s %6s %9s %9s %12s\n", "Store", "Apps", "Valid",
                  "Short", "Generic", "VRspec", "VRspec%");
    out << buf;
    for (const auto& row : report.policy_rows) {
        std::snprintf(buf, sizeof(buf), "%-12s %5lld %6lld %6lld %9lld %9lld %11.1f%%\n",
                      row.store.c_str(), row.apps, row.valid, row.too_short, row.store_generic,
                      row.vr_specific, percent_1dp(row.vr_specific, row.apps));
        out << buf;
    }
    return out.str();
}

std::string render_csv(const std::vector<AppAudit>& audits) {
    std::vector<const AppAudit*> ordered;
    ordered.reserve(audits.size());
    for (const auto& audit : audits) ordered.push_back(&audit);
    std::sort(ordered.begin(), ordered.end(), [](const AppAudit* a, const AppAudit* b) {
        return a->behavioral.app_id < b->behavioral.app_id;
    });

    std::ostringstream out;
    out << "app_id,store,engine,status,finding_code,severity,evidence\n";
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q += "\"\"";
            else q += c;
        }
        return q + "\"";
    };
    for (const AppAudit* audit : ordered) {
        if (audit->findings.empty()) {
            out << audit->behavioral.app_id << "," << audit->declarative.record.store << ","
                << apk::engine_name(audit->behavioral.engine) << ","
                << behavioral_status_name(audit->behavioral.analysis_status) << ",,,\n";
            continue;
        }
        for (const auto& finding : audit->findings) {
            std::string evidence;
            for (std::size_t i = 0; i < finding.evidence.size(); ++i) {
                if (i) evidence += "; ";
                evidence += finding.evidence[i];
            }
            out << audit->behavioral.app_id << "," << audit->declarative.record.store << ","
                << apk::engine_name(audit->behavioral.engine) << ","
                << behavioral_status_name(audit->behavioral.analysis_status) << ","
                << finding_code_name(finding.code) << "," << severity_name(finding.severity) << ","
                << quote(evidence) << "\n";
        }
    }
    return out.str();
}

} // namespace vraudit::compliance
