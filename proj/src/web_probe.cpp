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

#include "vraudit/web_probe.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <condition_variable>
#include <mutex>
#include <thread>

#include "vraudit/error.hpp"
#include "vraudit/policy_doc.hpp"

namespace vraudit::web {

namespace {

constexpr int kMaxRedirects = 5;

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

bool is_redirect(int status) {
    return status == 301 || status == 302 || status == 303 || status == 307 || status == 308;
}

std::string resolve_location(const ParsedUrl& base, const std::string& location) {
    if (location.rfind("http://", 0) == 0 || location.rfind("https://", 0) == 0) return location;
    std::string origin = base.scheme + "://" + base.host + ":" + std::to_string(base.port);
    if (!location.empty() && location[0] == '/') return origin + location;
    // relative to the base path's directory
    std::string path = base.target;
    auto slash = path.rfind('/');
    path = slash == std::string::npos ? "/" : path.substr(0, slash + 1);
    return origin + path + location;
}

ProbeStatus classify(int status) {
    if (status >= 200 && status < 300) return {ProbeStatusKind::Ok, 0};
    switch (status) {
    case 404: return {ProbeStatusKind::Code404, 0};
    case 400: return {ProbeStatusKind::Code400, 0};
    case 500: return {ProbeStatusKind::Code500, 0};
    case 503: return {ProbeStatusKind::Code503, 0};
    case 410: return {ProbeStatusKind::Code410, 0};
    default: return {ProbeStatusKind::OtherCode, status};
    }
}

struct FetchOutcome {
    ProbeResult result;
    std::string body;
};

FetchOutcome fetch_following_redirects(const std::string& url, int timeout_ms,
                                       HttpClient& client) {
    FetchOutcome out;
    out.result.url = url;

    std::string current = url;
    int budget = timeout_ms;
    std::vector<std::string> seen{url};
    for (int hop = 0; hop <= kMaxRedirects; ++hop) {
        ParsedUrl parsed = parse_url(current); // throws InvalidUrl on junk
        FetchResult fetched = client.get(current, budget);
        out.result.elapsed_ms += fetched.elapsed_ms;
        budget -= fetched.elapsed_ms;

        if (fetched.failure) {
            switch (*fetched.failure) {
            case FetchFailure::Timeout:
                out.result.status = {ProbeStatusKind::Timeout, 0};
                return out;
            case FetchFailure::DnsFailure:
                out.result.status = {ProbeStatusKind::DnsFailure, 0};
                return out;
            case FetchFailure::ConnectionFailed:
                out.result.status = {ProbeStatusKind::OtherCode, 0};
                out.result.detail = "connection failed";
                return out;
            }
        }

        const HttpResponse& response = *fetched.response;
        if (is_redirect(response.status)) {
            auto loc = response.headers.find("location");
            if (loc == response.headers.end()) {
                out.result.status = classify(response.status);
                out.result.detail = "redirect without location";
                return out;
            }
            std::string next = resolve_location(parsed, loc->second);
            if (std::find(seen.begin(), seen.end(), next) != seen.end()) {
                out.result.status = {ProbeStatusKind::OtherCode, response.status};
                out.result.detail = "redirect loop via " + next;
                return out;
            }
            if (budget <= 0) {
                out.result.status = {ProbeStatusKind::Timeout, 0};
                return out;
            }
            if (hop == kMaxRedirects) break;
            seen.push_back(next);
            current = next;
            continue;
        }

        out.result.status = classify(response.status);
        out.body = response.body;
        return out;
    }
    out.result.status = {ProbeStatusKind::OtherCode, 0};
    out.result.detail = "redirect limit exceeded";
    return out;
}

} // namespace

std::string probe_status_name(const ProbeStatus& status) {
    switch (status.kind) {
    case ProbeStatusKind::Ok: return "Ok";
    case ProbeStatusKind::Code404: return "404";
    case ProbeStatusKind::Code400: return "400";
    case ProbeStatusKind::Code500: return "500";
    case ProbeStatusKind::Code503: return "503";
    case ProbeStatusKind::Code410: return "410";
    case ProbeStatusKind::Timeout: return "Timeout";
    case ProbeStatusKind::DnsFailure: return "DnsFailure";
    case ProbeStatusKind::OtherCode: return "Other(" + std::to_string(status.other_code) + ")";
    }
    return "?";
}

ProbeResult check_link(const std::string& url, int timeout_ms, HttpClient& client) {
    return fetch_following_redirects(url, timeout_ms, client).result;
}

std::map<std::string, ProbeResult> check_links(const std::vector<std::string>& urls,
                                               const ProbeConfig& config, HttpClient& client) {
    std::map<std::string, ProbeResult> results;
    std::mutex results_mutex;

    std::mutex host_mutex;
    std::map<std::string, std::chrono::steady_clock::time_point> next_slot;

    std::size_t cursor = 0;
    std::mutex cursor_mutex;

    auto worker = [&] {
        for (;;) {
            std::string url;
            {
                std::lock_guard lock(cursor_mutex);
                if (cursor >= urls.size()) return;
                url = urls[cursor++];
            }
            ProbeResult result;
            try {
                std::string host = parse_url(url).host;
                // Reserve this host's next slot before touching the network.
                std::chrono::steady_clock::time_point when;
                {
                    std::lock_guard lock(host_mutex);
                    auto now = std::chrono::steady_clock::now();
                    auto& slot = next_slot[host];
                    when = std::max(slot, now);
                    slot = when + std::chrono::milliseconds(config.per_host_delay_ms);
                }
                std::this_thread::sleep_until(when);
                result = check_link(url, config.timeout_ms, client);
            } catch (const Error& e) {
                result.url = url;
                result.status = {ProbeStatusKind::OtherCode, 0};
                result.detail = e.what();
            }
            std::lock_guard lock(results_mutex);
            results[url] = std::move(result);
        }
    };

    std::size_t pool = std::max(1, config.concurrency);
    std::vector<std::thread> threads;
    threads.reserve(pool);
    for (std::size_t i = 0; i < pool; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    return results;
}

std::map<std::string, LanguageCoverage> discover_language_variants(
        const std::string& url, const std::set<std::string>& claimed_langs, HttpClient& client,
        const policy::LanguageDetector& detector, int timeout_ms) {
    static const std::map<std::string, std::string> kLanguageNames = {
            {"en", "english"}, {"fr", "french"},     {"de", "german"}, {"es", "spanish"},
            {"vi", "vietnamese"}, {"zh", "chinese"}, {"ja", "japanese"}, {"ko", "korean"},
    };

    // One fetch of the base page serves both the self-check and anchor scan.
    FetchOutcome base = fetch_following_redirects(url, timeout_ms, client);

    // Collect anchors whose text mentions "language" or a language name.
    struct Anchor {
        std::string href;
        std::string text_lower;
    };
    std::vector<Anchor> anchors;
    if (base.result.status.kind == ProbeStatusKind::Ok) {
        const std::string& html = base.body;
        std::size_t at = 0;
        while ((at = html.find("<a", at)) != std::string::npos) {
            std::size_t tag_end = html.find('>', at);
            if (tag_end == std::string::npos) break;
            std::string tag = html.substr(at, tag_end - at);
            std::size_t close = html.find("</a>", tag_end);
            if (close == std::string::npos) break;
            std::string text = lower(html.substr(tag_end + 1, close - tag_end - 1));
            auto href_at = tag.find("href=");
            if (href_at != std::string::npos && href_at + 6 < tag.size()) {
                char quote = tag[href_at + 5];
                if (quote == '"' || quote == '\'') {
                    auto end_quote = tag.find(quote, href_at + 6);
                    if (end_quote != std::string::npos) {
                        anchors.push_back({tag.substr(href_at + 6, end_quote - href_at - 6), text});
                    }
                }
            }
            at = close + 4;
        }
    }

    auto qualifies = [&](const std::string& candidate_url, const std::string& lang) {
        FetchOutcome outcome = fetch_following_redirects(candidate_url, timeout_ms, client);
        if (outcome.result.status.kind != ProbeStatusKind::Ok) return false;
        auto doc = policy::segment(outcome.body);
        return doc.word_count() >= 100 && detector.detect(outcome.body) == lang;
    };

    std::map<std::string, LanguageCoverage> coverage;
    ParsedUrl parsed = parse_url(url);
    for (const auto& lang : claimed_langs) {
        bool covered = false;

        // (0) the page itself may already be the claimed language
        if (base.result.status.kind == ProbeStatusKind::Ok) {
            auto doc = policy::segment(base.body);
            if (doc.word_count() >= 100 && detector.detect(base.body) == lang) covered = true;
        }

        // (a) language links and buttons
        if (!covered) {
            auto name_it = kLanguageNames.find(lang);
            for (const auto& anchor : anchors) {
                bool mentions_language = anchor.text_lower.find("language") != std::string::npos;
                bool mentions_name = name_it != kLanguageNames.end() &&
                                     anchor.text_lower.find(name_it->second) != std::string::npos;
                if (!mentions_language && !mentions_name) continue;
                if (qualifies(resolve_location(parsed, anchor.href), lang)) {
                    covered = true;
                    break;
                }
            }
        }

        // (b) two-letter path segment mutation
        if (!covered) {
            std::string target = parsed.target;
            std::vector<std::string> segments;
            std::string current;
            for (char c : target) {
                if (c == '/') {
                    segments.push_back(current);
                    current.clear();
                } else {
                    current.push_back(c);
                }
            }
            segments.push_back(current);
            for (std::size_t i = 0; i < segments.size() && !covered; ++i) {
                const std::string& seg = segments[i];
                if (seg.size() != 2 || !std::isalpha(static_cast<unsigned char>(seg[0])) ||
                    !std::isalpha(static_cast<unsigned char>(seg[1]))) {
                    continue;
                }
                if (lower(seg) == lang) continue; // that is the base page already checked
                std::vector<std::string> mutated = segments;
                mutated[i] = lang;
                std::string new_target;
                for (std::size_t s = 0; s < mutated.size(); ++s) {
                    if (s) new_target += "/";
                    new_target += mutated[s];
                }
                std::string candidate = parsed.scheme + "://" + parsed.host + ":" +
                                        std::to_string(parsed.port) + new_target;
                covered = qualifies(candidate, lang);
            }
        }

        coverage[lang] = covered ? LanguageCoverage::Covered : LanguageCoverage::Missing;
    }
    return coverage;
}

} // namespace vraudit::web
