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
#include <memory>
#include <optional>
#include <string>

namespace vraudit::web {

struct HttpResponse {
    int status = 0;
    std::string body;
    std::map<std::string, std::string> headers; // keys lowercased
};

enum class FetchFailure { Timeout, DnsFailure, ConnectionFailed };

struct FetchResult {
    std::optional<HttpResponse> response;
    std::optional<FetchFailure> failure;
    int elapsed_ms = 0;
};

/// Single-request GET without redirect following; the probe layer owns the
/// redirect chain. Everything network-facing goes through this interface so
/// the whole module tests offline.
class HttpClient {
public:
    virtual ~HttpClient() = default;
    virtual FetchResult get(const std::string& url, int timeout_ms) = 0;
};

struct ParsedUrl {
    std::string scheme;
    std::string host;
    int port = 0;
    std::string target; // path + query, "/" when empty
};

/// Throws InvalidUrl for anything that is not http(s)://host[:port][/...].
ParsedUrl parse_url(const std::string& url);

/// cpp-httplib-backed client. Response bodies are capped at 2 MiB.
std::unique_ptr<HttpClient> make_live_client();

} // namespace vraudit::web
