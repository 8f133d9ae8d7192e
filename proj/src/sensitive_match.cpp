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

#include "vraudit/sensitive_match.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>

namespace vraudit::unity {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

bool ci_contains(std::string_view haystack, std::string_view needle) {
    if (needle.size() > haystack.size()) return false;
    std::string h = lower(haystack);
    std::string n = lower(needle);
    return h.find(n) != std::string::npos;
}

std::string_view member_segment(std::string_view symbol) {
    auto at = symbol.rfind("::");
    return at == std::string_view::npos ? symbol : symbol.substr(at + 2);
}

bool code_rule(const catalog::ApiRule& rule) {
    return rule.kind == catalog::RuleKind::Api || rule.kind == catalog::RuleKind::Class;
}

std::string offset_label(const NamedCallGraph& graph, std::uint64_t node) {
    auto it = graph.labels.find(node);
    if (it != graph.labels.end()) return it->second;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "0x%llx", static_cast<unsigned long long>(node));
    return buf;
}

void sort_and_dedup(std::vector<AccessEvidence>& out) {
    std::sort(out.begin(), out.end(), [](const AccessEvidence& a, const AccessEvidence& b) {
        if (a.data_type != b.data_type) return a.data_type < b.data_type;
        if (a.api_name != b.api_name) return a.api_name < b.api_name;
        return a.path < b.path;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const AccessEvidence& a, const AccessEvidence& b) {
                              return a.data_type == b.data_type && a.api_name == b.api_name;
                          }),
              out.end());
}

} // namespace

bool name_matches(std::string_view symbol, std::string_view catalog_name) {
    if (symbol == catalog_name) return true;
    if (member_segment(symbol) == catalog_name) return true;
    std::size_t shorter = std::min(symbol.size(), catalog_name.size());
    if (shorter >= 8) {
        if (ci_contains(symbol, catalog_name) || ci_contains(catalog_name, symbol)) return true;
    }
    return false;
}

std::vector<AccessEvidence> reach_sensitive(const NamedCallGraph& graph,
                                            const std::vector<catalog::ApiRule>& rules) {
    // BFS from every root at once; predecessor chains give shortest paths.
    std::map<std::uint64_t, std::size_t> in_degree;
    std::map<std::uint64_t, std::vector<std::uint64_t>> successors;
    for (std::uint64_t node : graph.nodes) in_degree[node] = 0;
    for (const auto& edge : graph.edges) {
        ++in_degree[edge.callee];
        successors[edge.caller].push_back(edge.callee);
    }

    std::map<std::uint64_t, std::uint64_t> predecessor;
    std::map<std::uint64_t, std::size_t> distance;
    std::deque<std::uint64_t> queue;
    for (const auto& [node, deg] : in_degree) {
        if (deg == 0) {
            distance[node] = 0;
            queue.push_back(node);
        }
    }
    while (!queue.empty()) {
        std::uint64_t node = queue.front();
        queue.pop_front();
        for (std::uint64_t next : successors[node]) {
            if (distance.count(next)) continue;
            distance[next] = distance[node] + 1;
            predecessor[next] = node;
            queue.push_back(next);
        }
    }

    std::vector<AccessEvidence> out;
    for (const auto& [node, name] : graph.labels) {
        for (const auto& rule : rules) {
            if (!code_rule(rule)) continue;
            if (!name_matches(name, rule.name)) continue;
            AccessEvidence ev;
            ev.data_type = rule.data_type;
            ev.api_name = name;
            if (distance.count(node)) {
                std::vector<std::uint64_t> chain{node};
                while (predecessor.count(chain.back())) chain.push_back(predecessor.at(chain.back()));
                std::reverse(chain.begin(), chain.end());
                for (std::uint64_t hop : chain) ev.path.push_back(offset_label(graph, hop));
            } else {
                ev.path = {name}; // only reachable through cycles; report the node itself
            }
            out.push_back(std::move(ev));
        }
    }
    sort_and_dedup(out);
    return out;
}

std::vector<AccessEvidence> match_presence(const std::set<std::string>& names,
                                           const std::vector<catalog::ApiRule>& rules) {
    std::vector<AccessEvidence> out;
    for (const auto& name : names) {
        for (const auto& rule : rules) {
            if (!code_rule(rule)) continue;
            if (!name_matches(name, rule.name)) continue;
            out.push_back({rule.data_type, name, {name}});
        }
    }
    sort_and_dedup(out);
    return out;
}

} // namespace vraudit::unity
