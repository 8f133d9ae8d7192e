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
#include <set>
#include <string>
#include <vector>

#include "vraudit/http_client.hpp"
#include "vraudit/language.hpp"

namespace vraudit::web {

enum class ProbeStatusKind {
    Ok,
    Code404,
    Code400,
    Code500,
    Code503,
    Code410,
    OtherCode,
    Timeout,
    DnsFailure,
};

struct ProbeStatus {
    ProbeStatusKind kind = ProbeStatusKind::OtherCode;
    int other_code = 0; // populated for OtherCode

    bool operator==(const ProbeStatus&) const = default;
};

std::string probe_status_name(const ProbeStatus& status);

struct ProbeResult {
    std::string url;
    ProbeStatus status;
    int elapsed_ms = 0;
    std::string detail; // redirect-loop evidence and similar
};

/// GET with up to five redirect hops inside a single timeout budget. Network
/// failures are values, not errors; only a malformed URL throws.
ProbeResult check_link(const std::string& url, int timeout_ms, HttpClient& client);

struct ProbeConfig {
    int timeout_ms = 10000;
    int concurrency = 8;
    int per_host_delay_ms = 500;
};

/// Bounded worker pool with per-host request spacing; results keyed by URL.
std::map<std::string, ProbeResult> check_links(const std::vector<std::string>& urls,
                                               const ProbeConfig& config, HttpClient& client);

enum class LanguageCoverage { Covered, Missing };

/// For each claimed language: fetch the policy page and follow language-ish
/// anchors, then mutate two-letter path segments. A language is Covered when
/// some candidate fetches Ok, passes the 100-word validity floor, and the
/// detector agrees with the claimed code.
std::map<std::string, LanguageCoverage> discover_language_variants(
        const std::string& url, const std::set<std::string>& claimed_langs, HttpClient& client,
        const policy::LanguageDetector& detector, int timeout_ms = 10000);

} // namespace vraudit::web
