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

#include "vraudit/http_client.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>

#include <netdb.h>

#include <httplib.h>

#include "vraudit/error.hpp"

namespace vraudit::web {

namespace {

constexpr std::size_t kBodyCap = 2 * 1024 * 1024;

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

bool host_resolves(const std::string& host) {
    addrinfo hints{};
    hints.ai_family = AF_UNSPEC;
    hints.ai_socktype = SOCK_STREAM;
    addrinfo* result = nullptr;
    int rc = getaddrinfo(host.c_str(), nullptr, &hints, &result);
    if (result) freeaddrinfo(result);
    return rc == 0;
}

class LiveHttpClient final : public HttpClient {
public:
    FetchResult get(const std::string& url, int timeout_ms) override {
        auto started = std::chrono::steady_clock::now();
        FetchResult out;
        auto elapsed = [&] {
            return static_cast<int>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                            std::chrono::steady_clock::now() - started)
                                            .count());
        };

        ParsedUrl parsed = parse_url(url);
        if (!host_resolves(parsed.host)) {
            out.failure = FetchFailure::DnsFailure;
            out.elapsed_ms = elapsed();
            return out;
        }

        std::string base = parsed.scheme + "://" + parsed.host + ":" + std::to_string(parsed.port);
        httplib::Client client(base);
        client.set_follow_location(false);
        client.set_connection_timeout(0, timeout_ms * 1000);
        client.set_read_timeout(0, timeout_ms * 1000);
        client.set_write_timeout(0, timeout_ms * 1000);
        client.enable_server_certificate_verification(false);

        std::string body;
        httplib::Result result = client.Get(
                parsed.target,
                [&](const httplib::Response&) { return true; },
                [&](const char* data, std::size_t len) {
                    std::size_t take = std::min(len, kBodyCap - std::min(kBodyCap, body.size()));
                    body.append(data, take);
                    return body.size() < kBodyCap;
                });
        out.elapsed_ms = elapsed();

        if (!result) {
            switch (result.error()) {
            case httplib::Error::ConnectionTimeout:
            case httplib::Error::Read:
            case httplib::Error::Write:
                // A body-cap abort also lands here; report what we have.
                if (!body.empty()) break;
                out.failure = out.elapsed_ms >= timeout_ms ? FetchFailure::Timeout
                                                           : FetchFailure::ConnectionFailed;
                return out;
            default:
                out.failure = FetchFailure::ConnectionFailed;
                return out;
            }
        }

        HttpResponse response;
        response.status = result ? result->status : 200;
        response.body = std::move(body);
        if (result) {
            for (const auto& [key, value] : result->headers) {
                response.headers[lower(key)] = value;
            }
        }
        out.response = std::move(response);
        return out;
    }
};

} // namespace

ParsedUrl parse_url(const std::string& url) {
    ParsedUrl out;
    auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) raise(Errc::InvalidUrl, url);
    out.scheme = lower(url.substr(0, scheme_end));
    if (out.scheme != "http" && out.scheme != "https") {
        raise(Errc::InvalidUrl, "unsupported scheme in " + url);
    }
    std::size_t host_start = scheme_end + 3;
    std::size_t path_start = url.find_first_of("/?", host_start);
    std::string authority = url.substr(
            host_start, path_start == std::string::npos ? std::string::npos
                                                        : path_start - host_start);
    if (authority.empty()) raise(Errc::InvalidUrl, "missing host in " + url);
    auto colon = authority.rfind(':');
    if (colon != std::string::npos &&
        std::all_of(authority.begin() + colon + 1, authority.end(),
                    [](unsigned char c) { return std::isdigit(c); }) &&
        colon + 1 < authority.size()) {
        out.host = authority.substr(0, colon);
        out.port = std::stoi(authority.substr(colon + 1));
    } else {
        out.host = authority;
        out.port = out.scheme == "https" ? 443 : 80;
    }
    if (out.host.empty()) raise(Errc::InvalidUrl, "missing host in " + url);
    out.target = path_start == std::string::npos ? "/" : url.substr(path_start);
    if (out.target.empty() || out.target[0] == '?') out.target = "/" + out.target;
    return out;
}

std::unique_ptr<HttpClient> make_live_client() { return std::make_unique<LiveHttpClient>(); }

} // namespace vraudit::web
