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

#include "vraudit/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <sstream>
#include <thread>

#include "vraudit/call_graph.hpp"
#include "vraudit/dotnet_metadata.hpp"
#include "vraudit/global_metadata.hpp"
#include "vraudit/manifest.hpp"
#include "vraudit/sensitive_match.hpp"
#include "vraudit/unreal_config.hpp"
#include "vraudit/unreal_pak.hpp"

namespace vraudit::pipeline {

namespace {

namespace fs = std::filesystem;

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

std::string read_text_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::IoError, "cannot read " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string engine_family(apk::EngineKind kind) {
    switch (kind) {
    case apk::EngineKind::UnityIl2cpp:
    case apk::EngineKind::UnityMono:
        return "Unity";
    case apk::EngineKind::Unreal:
        return "Unreal";
    default:
        return "Unknown";
    }
}

std::vector<catalog::ApiRule> rules_for(const catalog::SensitivityCatalog& sensitivity,
                                        const std::string& store_hint,
                                        const std::string& engine) {
    if (!store_hint.empty()) return sensitivity.lookup(store_hint, engine);
    std::vector<catalog::ApiRule> out;
    std::string e;
    for (char c : engine) e += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    for (const auto& rule : sensitivity.api_rules()) {
        std::string re;
        for (char c : rule.engine) re += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (re == "any" || re == e) out.push_back(rule);
    }
    return out;
}

std::string find_entry_with_suffix(const apk::ApkPackage& pkg, std::string_view suffix) {
    for (const auto& [path, entry] : pkg.entries()) {
        if (ends_with(path, suffix)) return path;
    }
    return {};
}

void analyze_unity_il2cpp(const apk::ApkPackage& pkg, compliance::BehavioralProfile& profile,
                          const std::vector<catalog::ApiRule>& rules) {
    std::string metadata_path = find_entry_with_suffix(pkg, "global-metadata.dat");
    std::string so_path = find_entry_with_suffix(pkg, "/libil2cpp.so");
    if (metadata_path.empty() || so_path.empty()) {
        profile.analysis_status = compliance::BehavioralProfile::Status::LacksFiles;
        profile.notes.push_back(metadata_path.empty() ? "missing global-metadata.dat"
                                                      : "missing libil2cpp.so");
        return;
    }

    unity::MetadataTable metadata;
    try {
        Bytes metadata_bytes = pkg.extract(metadata_path);
        metadata = unity::parse_global_metadata(metadata_bytes);
    } catch (const Error& e) {
        profile.analysis_status = compliance::BehavioralProfile::Status::LacksFiles;
        profile.notes.push_back(std::string("metadata unusable: ") + e.what());
        return;
    }

    if (metadata.parse_mode == unity::MetadataTable::ParseMode::Structured) {
        profile.notes.push_back("metadata: structured");
        try {
            Bytes elf = pkg.extract(so_path);
            unity::NamedCallGraph graph = unity::extract_call_edges(elf, metadata);
            profile.accesses = unity::reach_sensitive(graph, rules);
            profile.analysis_status = compliance::BehavioralProfile::Status::Complete;
            profile.notes.push_back("reachability roots: in-degree-0 heuristic");
            return;
        } catch (const Error& e) {
            profile.notes.push_back(std::string("call graph unavailable: ") + e.what());
            // fall through to presence matching on the metadata strings
        }
    } else {
        profile.notes.push_back("metadata: string_scan");
    }
    profile.accesses = unity::match_presence(metadata.raw_strings, rules);
    profile.analysis_status = compliance::BehavioralProfile::Status::Complete;
}

void analyze_unity_mono(const apk::ApkPackage& pkg, compliance::BehavioralProfile& profile,
                        const std::vector<catalog::ApiRule>& rules) {
    std::set<std::string> names;
    std::size_t parsed = 0;
    for (const auto& [path, entry] : pkg.entries()) {
        if (path.rfind("assets/", 0) != 0 || !ends_with(path, ".dll")) continue;
        try {
            Bytes assembly = pkg.extract(path);
            auto assembly_names = unity::parse_dotnet_names(assembly);
            names.insert(assembly_names.begin(), assembly_names.end());
            ++parsed;
        } catch (const Error& e) {
            profile.notes.push_back(path + ": " + e.what());
        }
    }
    if (parsed == 0) {
        profile.analysis_status = compliance::BehavioralProfile::Status::LacksFiles;
        profile.notes.push_back("no readable assemblies under assets/");
        return;
    }
    profile.notes.push_back("mono: presence-only over " + std::to_string(parsed) + " assemblies");
    profile.accesses = unity::match_presence(names, rules);
    profile.analysis_status = compliance::BehavioralProfile::Status::Complete;
}

void analyze_unreal(const apk::ApkPackage& pkg, compliance::BehavioralProfile& profile,
                    const std::vector<catalog::ApiRule>& rules) {
    Bytes pak;
    try {
        std::string obb_path = find_entry_with_suffix(pkg, ".obb.png");
        if (!obb_path.empty()) {
            Bytes obb = pkg.extract(obb_path);
            pak = unreal::unwrap_obb(obb);
        } else {
            std::string pak_path = find_entry_with_suffix(pkg, ".pak");
            if (pak_path.empty()) {
                profile.analysis_status = compliance::BehavioralProfile::Status::LacksFiles;
                profile.notes.push_back("no obb or pak entry");
                return;
            }
            pak = pkg.extract(pak_path);
        }
        unreal::PakIndex index = unreal::parse_pak_index(pak);
        unreal::UnrealArtifacts artifacts = unreal::read_config_and_plugins(pak, index);
        profile.accesses = unreal::detect_sensitive_config(artifacts, rules);
        profile.analysis_status = compliance::BehavioralProfile::Status::Complete;
        if (!artifacts.config) profile.notes.push_back("no DefaultEngine.ini in pak");
        profile.notes.push_back("unreal: " + std::to_string(artifacts.plugins.size()) +
                                " plugin descriptors");
    } catch (const Error& e) {
        profile.analysis_status = compliance::BehavioralProfile::Status::LacksFiles;
        profile.notes.push_back(std::string("pak unusable: ") + e.what());
    }
}

} // namespace

DataContext DataContext::load(const std::string& data_dir, const std::string& catalog_override) {
    DataContext data;
    std::string catalog_path = catalog_override.empty() ? data_dir + "/catalog.json"
                                                        : catalog_override;
    data.sensitivity = catalog::SensitivityCatalog::load_file(catalog_path);
    data.component_rules = policy::ComponentRules::load_file(data_dir + "/components.json");
    data.language_detector = policy::LanguageDetector::load_dir(data_dir + "/lang");

    std::string defaults_text = read_text_file(data_dir + "/defaults.json");
    auto defaults = nlohmann::json::parse(defaults_text, nullptr, false);
    if (defaults.is_discarded() || !defaults.is_object()) {
        raise(Errc::SchemaViolation, "defaults.json is not a JSON object");
    }
    for (const auto& p : defaults.value("benign_permissions", nlohmann::json::array())) {
        data.benign_permissions.insert(p.get<std::string>());
    }
    for (const auto& p : defaults.value("store_policy_url_prefixes", nlohmann::json::array())) {
        data.store_policy_url_prefixes.insert(p.get<std::string>());
    }
    return data;
}

compliance::BehavioralProfile analyze_apk_file(const std::filesystem::path& path,
                                               const DataContext& data,
                                               const std::string& store_hint) {
    compliance::BehavioralProfile profile;
    profile.app_id = path.stem().string();

    apk::ApkPackage pkg = apk::ApkPackage::open(path);

    if (pkg.contains("AndroidManifest.xml")) {
        try {
            Bytes manifest_bytes = pkg.extract("AndroidManifest.xml");
            apk::ManifestInfo info = apk::parse_manifest(manifest_bytes);
            profile.manifest_permissions = info.permissions;
            profile.package_name = info.package_name;
        } catch (const Error& e) {
            profile.notes.push_back(std::string("manifest unreadable: ") + e.what());
        }
    } else {
        profile.notes.push_back("no AndroidManifest.xml");
    }

    profile.engine = apk::detect_engine(pkg);
    profile.notes.push_back("engine_detection: heuristic");
    auto rules = rules_for(data.sensitivity, store_hint, engine_family(profile.engine));

    switch (profile.engine) {
    case apk::EngineKind::UnityIl2cpp:
        analyze_unity_il2cpp(pkg, profile, rules);
        break;
    case apk::EngineKind::UnityMono:
        analyze_unity_mono(pkg, profile, rules);
        break;
    case apk::EngineKind::Unreal:
        analyze_unreal(pkg, profile, rules);
        break;
    case apk::EngineKind::Unknown:
        profile.analysis_status = compliance::BehavioralProfile::Status::Unsupported;
        profile.notes.push_back("engine not recognized");
        break;
    }
    // The accesses-empty-unless-complete invariant.
    if (profile.analysis_status != compliance::BehavioralProfile::Status::Complete) {
        profile.accesses.clear();
    }
    return profile;
}

PolicyAnalysis analyze_policy_text(const std::string& text,
                                   const std::optional<std::string>& source_url,
                                   const DataContext& data, const std::string& app_name) {
    PolicyAnalysis analysis;
    policy::PolicyDoc doc = policy::segment(text, source_url);
    analysis.word_count = doc.word_count();
    analysis.sentence_count = doc.sentence_count();
    analysis.validity = policy::validity_check(doc, data.store_policy_url_prefixes);
    analysis.specificity = policy::specificity_check(doc, app_name);
    if (analysis.word_count > 0 && analysis.sentence_count > 0) {
        analysis.readability = policy::readability(doc);
    }
    analysis.coverage = policy::classify_components(doc, data.component_rules);
    analysis.child_age = policy::extract_child_age(doc, analysis.coverage);
    analysis.declared = policy::extract_declared_datatypes(doc, analysis.coverage, data.sensitivity);
    analysis.language = data.language_detector.detect(text);
    return analysis;
}

AuditOutcome run_audit(const AuditConfig& config, const DataContext& data,
                       web::HttpClient* client) {
    if (config.live_network && client == nullptr) {
        raise(Errc::ConfigError, "live network requested without a client");
    }
    auto records = compliance::ingest_records_file(config.records_path);

    auto find_by_stem = [](const std::string& dir, const std::string& stem,
                           const char* preferred_ext) -> fs::path {
        if (dir.empty()) return {};
        fs::path direct = fs::path(dir) / (stem + preferred_ext);
        std::error_code ec;
        if (fs::exists(direct, ec)) return direct;
        for (const auto& entry : fs::directory_iterator(dir, ec)) {
            if (!ec && entry.path().stem() == stem) return entry.path();
        }
        return {};
    };

    std::vector<compliance::AppAudit> audits(records.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= records.size()) return;
            const auto& record = records[i];
            compliance::AppAudit& audit = audits[i];

            // behavioral side
            fs::path apk_path = find_by_stem(config.apk_dir, record.app_id, ".apk");
            if (!apk_path.empty()) {
                try {
                    audit.behavioral = analyze_apk_file(apk_path, data, record.store);
                } catch (const Error& e) {
                    audit.behavioral = {};
                    audit.behavioral.analysis_status =
                            compliance::BehavioralProfile::Status::Unsupported;
                    audit.behavioral.notes.push_back(std::string("apk unreadable: ") + e.what());
                }
            } else {
                audit.behavioral.analysis_status =
                        compliance::BehavioralProfile::Status::Unsupported;
                audit.behavioral.notes.push_back("no apk for app_id");
            }
            audit.behavioral.app_id = record.app_id;

            // declarative side
            audit.declarative.app_id = record.app_id;
            audit.declarative.record = record;
            fs::path policy_path = find_by_stem(config.policy_dir, record.app_id, ".txt");
            if (!policy_path.empty()) {
                std::string text = read_text_file(policy_path);
                PolicyAnalysis analysis =
                        analyze_policy_text(text, record.policy_url, data, record.name);
                audit.declarative.policy_text_available = true;
                audit.declarative.validity = analysis.validity;
                audit.declarative.specificity = analysis.specificity;
                audit.declarative.readability = analysis.readability;
                audit.declarative.coverage = analysis.coverage;
                audit.declarative.declared = analysis.declared;
                audit.declarative.child_age = analysis.child_age;
            }

            if (config.live_network && record.policy_url) {
                audit.declarative.link_status =
                        web::check_link(*record.policy_url, config.timeout_ms, *client);
                std::set<std::string> claimed;
                for (const auto& lang : record.supported_languages) claimed.insert(lang);
                if (!claimed.empty()) {
                    audit.declarative.language_coverage = web::discover_language_variants(
                            *record.policy_url, claimed, *client, data.language_detector,
                            config.timeout_ms);
                }
            }

            // findings, in a fixed order for deterministic output
            auto append = [&](std::vector<compliance::Finding> found) {
                for (auto& f : found) audit.findings.push_back(std::move(f));
            };
            append(compliance::check_permission_discrepancy(audit.behavioral, record,
                                                            data.benign_permissions));
            append(compliance::check_cross_platform_permissions(audit.behavioral, record));
            append(compliance::check_children(audit.declarative));
            append(compliance::check_behavior_declaration(audit.behavioral, audit.declarative));
            append(compliance::check_policy_findings(audit.declarative));
        }
    };

    std::size_t pool = std::max(1, config.workers);
    std::vector<std::thread> threads;
    threads.reserve(pool);
    for (std::size_t i = 0; i < pool; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();

    AuditOutcome outcome;
    outcome.audits = std::move(audits);
    outcome.report = compliance::aggregate_report(outcome.audits);
    return outcome;
}

void write_outputs(const AuditConfig& config, const AuditOutcome& outcome) {
    nlohmann::ordered_json doc = compliance::report_to_json(outcome.audits, outcome.report);
    {
        std::ofstream out(config.output_path, std::ios::binary);
        if (!out) raise(Errc::IoError, "cannot write " + config.output_path);
        out << doc.dump(2) << "\n";
    }
    fs::path base(config.output_path);
    if (config.format == "table") {
        std::ofstream out(base.replace_extension(".txt"));
        out << compliance::render_text_tables(outcome.report);
    } else if (config.format == "csv") {
        std::ofstream out(base.replace_extension(".csv"));
        out << compliance::render_csv(outcome.audits);
    }
}

} // namespace vraudit::pipeline
