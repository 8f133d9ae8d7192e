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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "vraudit/pipeline.hpp"

namespace {

using vraudit::Errc;
using vraudit::Error;

#ifndef VRAUDIT_DEFAULT_DATA_DIR
#define VRAUDIT_DEFAULT_DATA_DIR "data"
#endif

void print_error(const Error& e) {
    nlohmann::ordered_json err;
    err["error"]["code"] = vraudit::errc_name(e.code());
    err["error"]["message"] = e.what();
    std::cerr << err.dump(2) << std::endl;
}

std::string catalog_override(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    const char* env = std::getenv("AUDITOR_CATALOG");
    return env ? env : "";
}

nlohmann::ordered_json profile_to_json(const vraudit::compliance::BehavioralProfile& profile) {
    nlohmann::ordered_json out;
    out["app_id"] = profile.app_id;
    out["engine"] = vraudit::apk::engine_name(profile.engine);
    out["analysis_status"] = vraudit::compliance::behavioral_status_name(profile.analysis_status);
    out["package_name"] = profile.package_name;
    out["manifest_permissions"] = profile.manifest_permissions;
    auto accesses = nlohmann::ordered_json::array();
    for (const auto& access : profile.accesses) {
        accesses.push_back({{"data_type", vraudit::catalog::data_type_name(access.data_type)},
                            {"api_name", access.api_name},
                            {"path", access.path}});
    }
    out["accesses"] = std::move(accesses);
    out["notes"] = profile.notes;
    return out;
}

int cmd_analyze_apk(const std::string& path, const std::string& data_dir,
                    const std::string& catalog_path, const std::string& store) {
    try {
        auto data = vraudit::pipeline::DataContext::load(data_dir, catalog_override(catalog_path));
        auto profile = vraudit::pipeline::analyze_apk_file(path, data, store);
        std::cout << profile_to_json(profile).dump(2) << std::endl;
        return 0;
    } catch (const Error& e) {
        print_error(e);
        return 2;
    }
}

int cmd_analyze_policy(const std::string& path, const std::string& data_dir,
                       const std::string& catalog_path, const std::string& app_name,
                       const std::string& url) {
    try {
        auto data = vraudit::pipeline::DataContext::load(data_dir, catalog_override(catalog_path));
        std::ifstream in(path, std::ios::binary);
        if (!in) throw Error(Errc::IoError, "cannot read " + path);
        std::stringstream ss;
        ss << in.rdbuf();
        std::optional<std::string> source_url;
        if (!url.empty()) source_url = url;
        auto analysis = vraudit::pipeline::analyze_policy_text(ss.str(), source_url, data, app_name);

        nlohmann::ordered_json out;
        out["word_count"] = analysis.word_count;
        out["sentence_count"] = analysis.sentence_count;
        out["validity"] = vraudit::policy::validity_name(analysis.validity);
        out["vr_specific"] = analysis.specificity.is_vr_specific;
        out["specificity_hits"] = analysis.specificity.hits;
        if (analysis.readability) {
            const auto& r = *analysis.readability;
            out["readability"] = {{"ari", r.ari}, {"fres", r.fres}, {"lix", r.lix},
                                  {"lpw", r.lpw}, {"spw", r.spw},   {"wps", r.wps},
                                  {"sc", r.sc},   {"wc", r.wc},     {"rt_seconds", r.rt_seconds},
                                  {"st_seconds", r.st_seconds}};
        }
        auto components = nlohmann::ordered_json::array();
        for (auto c : vraudit::policy::kAllComponents) {
            if (analysis.coverage.has(c)) components.push_back(vraudit::policy::component_name(c));
        }
        out["components"] = std::move(components);
        if (analysis.child_age) out["child_age"] = *analysis.child_age;
        auto declared = nlohmann::ordered_json::array();
        for (auto t : analysis.declared.specific) {
            declared.push_back(vraudit::catalog::data_type_name(t));
        }
        out["declared_specific"] = std::move(declared);
        out["declared_vague"] = analysis.declared.vague;
        out["language"] = analysis.language;
        std::cout << out.dump(2) << std::endl;
        return 0;
    } catch (const Error& e) {
        print_error(e);
        return 2;
    }
}

int cmd_check_links(const std::string& records_path, const std::string& data_dir,
                    const std::string& catalog_path, bool live, int timeout_ms, int workers,
                    int per_host_delay_ms) {
    try {
        if (!live) {
            throw Error(Errc::ConfigError, "check-links needs --live (offline by default)");
        }
        auto data = vraudit::pipeline::DataContext::load(data_dir, catalog_override(catalog_path));
        (void)data;
        auto records = vraudit::compliance::ingest_records_file(records_path);
        std::vector<std::string> urls;
        for (const auto& record : records) {
            if (record.policy_url) urls.push_back(*record.policy_url);
        }
        auto client = vraudit::web::make_live_client();
        vraudit::web::ProbeConfig config;
        config.timeout_ms = timeout_ms;
        config.concurrency = workers;
        config.per_host_delay_ms = per_host_delay_ms;
        auto results = vraudit::web::check_links(urls, config, *client);

        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (const auto& [url, result] : results) {
            nlohmann::ordered_json item;
            item["url"] = url;
            item["status"] = vraudit::web::probe_status_name(result.status);
            item["elapsed_ms"] = result.elapsed_ms;
            if (!result.detail.empty()) item["detail"] = result.detail;
            out.push_back(std::move(item));
        }
        std::cout << out.dump(2) << std::endl;
        return 0;
    } catch (const Error& e) {
        print_error(e);
        return 1;
    }
}

int cmd_audit(vraudit::pipeline::AuditConfig config, const std::string& data_dir,
              const std::string& catalog_path) {
    try {
        auto data = vraudit::pipeline::DataContext::load(data_dir, catalog_override(catalog_path));
        std::unique_ptr<vraudit::web::HttpClient> client;
        if (config.live_network) client = vraudit::web::make_live_client();
        auto outcome = vraudit::pipeline::run_audit(config, data, client.get());
        vraudit::pipeline::write_outputs(config, outcome);
        std::cerr << "audited " << outcome.report.total_apps << " apps -> " << config.output_path
                  << std::endl;
        return 0;
    } catch (const Error& e) {
        print_error(e);
        return 1;
    }
}

int cmd_catalog_validate(const std::string& data_dir, const std::string& catalog_path) {
    try {
        std::string path = catalog_override(catalog_path);
        if (path.empty()) path = data_dir + "/catalog.json";
        auto catalog = vraudit::catalog::SensitivityCatalog::load_file(path);
        std::cout << "catalog ok: " << catalog.api_rules().size() << " rules, "
                  << catalog.policy_corpus().size() << " corpus categories" << std::endl;
        return 0;
    } catch (const Error& e) {
        print_error(e);
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"VR app privacy auditor: behavioral vs. declarative profiles"};
    app.require_subcommand(1);

    std::string data_dir = VRAUDIT_DEFAULT_DATA_DIR;
    std::string catalog_path;
    app.add_option("--data-dir", data_dir, "Directory with catalog/components/lang data");
    app.add_option("--catalog", catalog_path, "Catalog path (or env AUDITOR_CATALOG)");

    auto* analyze_apk = app.add_subcommand("analyze-apk", "Behavioral profile of one .apk");
    std::string apk_path, store;
    analyze_apk->add_option("apk", apk_path, "Path to the .apk")->required();
    analyze_apk->add_option("--store", store, "Restrict catalog rules to one store");

    auto* analyze_policy = app.add_subcommand("analyze-policy", "Analyze one policy text file");
    std::string policy_path, app_name, policy_url;
    analyze_policy->add_option("policy", policy_path, "Path to policy text")->required();
    analyze_policy->add_option("--app-name", app_name, "App name for the specificity check");
    analyze_policy->add_option("--url", policy_url, "Source URL of the policy");

    auto* check_links = app.add_subcommand("check-links", "Probe policy links from records");
    std::string records_path;
    bool live = false;
    int timeout_ms = 10000, workers = 8, per_host_delay = 500;
    check_links->add_option("records", records_path, "Records JSON")->required();
    check_links->add_flag("--live", live, "Allow network access");
    check_links->add_option("--timeout-ms", timeout_ms, "Per-link timeout");
    check_links->add_option("--workers", workers, "Concurrent probes");
    check_links->add_option("--per-host-delay-ms", per_host_delay, "Spacing per host");

    auto* audit = app.add_subcommand("audit", "Full corpus audit");
    vraudit::pipeline::AuditConfig config;
    audit->add_option("--records", config.records_path, "Records JSON")->required();
    audit->add_option("--apk-dir", config.apk_dir, "Directory of <app_id>.apk");
    audit->add_option("--policy-dir", config.policy_dir, "Directory of <app_id>.txt policies");
    audit->add_option("--output", config.output_path, "Report output path");
    audit->add_option("--format", config.format, "json | table | csv")
            ->check(CLI::IsMember({"json", "table", "csv"}));
    audit->add_flag("--live", config.live_network, "Probe policy links over the network");
    audit->add_option("--timeout-ms", config.timeout_ms, "Probe timeout");
    audit->add_option("--workers", config.workers, "Worker threads")->check(CLI::PositiveNumber);

    auto* catalog_validate = app.add_subcommand("catalog-validate", "Validate the catalog file");

    CLI11_PARSE(app, argc, argv);

    if (analyze_apk->parsed()) return cmd_analyze_apk(apk_path, data_dir, catalog_path, store);
    if (analyze_policy->parsed()) {
        return cmd_analyze_policy(policy_path, data_dir, catalog_path, app_name, policy_url);
    }
    if (check_links->parsed()) {
        return cmd_check_links(records_path, data_dir, catalog_path, live, timeout_ms, workers,
                               per_host_delay);
    }
    if (audit->parsed()) return cmd_audit(config, data_dir, catalog_path);
    if (catalog_validate->parsed()) return cmd_catalog_validate(data_dir, catalog_path);
    return 1;
}
