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

#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "vraudit/http_client.hpp"

namespace testsupport {

/// Scripted transcript client: URL -> canned response or failure. Records
/// call timestamps and the concurrency high-water mark so rate-limit and
/// worker-bound properties are observable.
class FakeClient : public vraudit::web::HttpClient {
public:
    struct Script {
        int status = 200;
        std::string body;
        std::map<std::string, std::string> headers;
        std::optional<vraudit::web::FetchFailure> failure;
        int reported_elapsed_ms = 5;
    };

    struct Call {
        std::string url;
        std::chrono::steady_clock::time_point at;
    };

    std::map<std::string, Script> routes;
    int sleep_ms = 0; // simulated network latency (real sleep)

    vraudit::web::FetchResult get(const std::string& url, int timeout_ms) override {
        (void)timeout_ms;
        int now_in_flight = ++in_flight_;
        {
            std::lock_guard lock(mutex_);
            max_concurrent_ = std::max(max_concurrent_, now_in_flight);
            calls_.push_back({url, std::chrono::steady_clock::now()});
        }
        if (sleep_ms > 0) std::this_thread::sleep_for(std::chrono::milliseconds(sleep_ms));

        vraudit::web::FetchResult out;
        auto it = routes.find(url);
        if (it == routes.end()) {
            out.response = vraudit::web::HttpResponse{404, "no such route", {}};
            out.elapsed_ms = 1;
        } else if (it->second.failure) {
            out.failure = it->second.failure;
            out.elapsed_ms = it->second.reported_elapsed_ms;
        } else {
            out.response = vraudit::web::HttpResponse{it->second.status, it->second.body,
                                                      it->second.headers};
            out.elapsed_ms = it->second.reported_elapsed_ms;
        }
        --in_flight_;
        return out;
    }

    std::vector<Call> calls() {
        std::lock_guard lock(mutex_);
        return calls_;
    }

    int max_concurrent() {
        std::lock_guard lock(mutex_);
        return max_concurrent_;
    }

private:
    std::mutex mutex_;
    std::vector<Call> calls_;
    std::atomic<int> in_flight_{0};
    int max_concurrent_ = 0;
};

} // namespace testsupport
