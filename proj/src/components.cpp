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

#include "vraudit/components.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vraudit/error.hpp"

namespace vraudit::policy {

namespace {

/// Number of non-overlapping occurrences of a normalized phrase.
int phrase_occurrences(const std::string& normalized_text, std::string_view phrase) {
    std::string p = " " + normalize_phrase_text(phrase) + " ";
    if (p == "  ") return 0;
    int n = 0;
    std::size_t at = 0;
    while ((at = normalized_text.find(p, at)) != std::string::npos) {
        ++n;
        at += p.size() - 1; // phrases may chain with one shared space
    }
    return n;
}

struct ParagraphView {
    std::string heading_norm; // empty when the paragraph has no heading line
    std::string heading_padded;
    std::string body_padded;  // normalized, space-padded
};

ParagraphView split_heading(const std::string& paragraph_text) {
    ParagraphView view;
    std::string_view text = paragraph_text;
    auto nl = text.find('\n');
    std::string_view first_line = text.substr(0, nl == std::string_view::npos ? text.size() : nl);

    std::string first_norm = normalize_phrase_text(first_line);
    std::size_t token_count = first_norm.empty()
            ? 0
            : static_cast<std::size_t>(std::count(first_norm.begin(), first_norm.end(), ' ')) + 1;
    std::string_view trimmed = first_line;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) {
        trimmed.remove_suffix(1);
    }
    bool has_more_lines = nl != std::string_view::npos;
    bool colon_end = !trimmed.empty() && trimmed.back() == ':';
    if (token_count > 0 && token_count <= 8 && (has_more_lines || colon_end)) {
        view.heading_norm = first_norm;
        view.heading_padded = " " + first_norm + " ";
        std::string_view rest = has_more_lines ? text.substr(nl + 1) : std::string_view{};
        view.body_padded = " " + normalize_phrase_text(rest) + " ";
    } else {
        view.body_padded = " " + normalize_phrase_text(text) + " ";
    }
    return view;
}

const std::vector<std::string> kAgeTerms = {"years", "age", "old"};

std::optional<int> number_token_value(const std::string& token) {
    if (!token.empty() && std::all_of(token.begin(), token.end(), [](unsigned char c) {
            return std::isdigit(c);
        })) {
        if (token.size() > 3) return std::nullopt;
        return std::stoi(token);
    }
    if (token == "thirteen") return 13;
    if (token == "sixteen") return 16;
    if (token == "eighteen") return 18;
    return std::nullopt;
}

} // namespace

const char* component_name(Component c) {
    switch (c) {
    case Component::Collect: return "COLLECT";
    case Component::Share: return "SHARE";
    case Component::Security: return "SECURITY";
    case Component::Right: return "RIGHT";
    case Component::Children: return "CHILDREN";
    case Component::Region: return "REGION";
    case Component::Update: return "UPDATE";
    case Component::Provider: return "PROVIDER";
    case Component::Retention: return "RETENTION";
    case Component::DataUse: return "DATA_USE";
    }
    return "?";
}

std::optional<Component> component_from(std::string_view name) {
    for (Component c : kAllComponents) {
        if (name == component_name(c)) return c;
    }
    return std::nullopt;
}

ComponentRules ComponentRules::load(BytesView json_text) {
    nlohmann::json doc = nlohmann::json::parse(json_text.begin(), json_text.end(), nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) {
        raise(Errc::SchemaViolation, "component rules are not a JSON object");
    }
    ComponentRules rules;
    for (const auto& [name, body] : doc.items()) {
        auto component = component_from(name);
        if (!component) raise(Errc::SchemaViolation, "unknown component " + name);
        if (body.contains("headings")) {
            for (const auto& h : body["headings"]) {
                rules.headings_[*component].push_back(normalize_phrase_text(h.get<std::string>()));
            }
        }
        if (!body.contains("patterns") || !body["patterns"].is_array()) {
            raise(Errc::SchemaViolation, name + " has no patterns");
        }
        for (const auto& p : body["patterns"]) {
            Pattern pattern;
            pattern.text = p.at("text").get<std::string>();
            pattern.weight = p.value("weight", 1);
            rules.patterns_[*component].push_back(std::move(pattern));
        }
    }
    for (Component c : kAllComponents) {
        if (rules.patterns_[c].empty()) {
            raise(Errc::SchemaViolation,
                  std::string("no patterns for ") + component_name(c));
        }
    }
    return rules;
}

ComponentRules ComponentRules::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::IoError, "cannot open component rules " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    return load(as_bytes(text));
}

const std::vector<ComponentRules::Pattern>& ComponentRules::patterns(Component c) const {
    return patterns_.at(c);
}

const std::vector<std::string>& ComponentRules::headings(Component c) const {
    static const std::vector<std::string> kNone;
    auto it = headings_.find(c);
    return it == headings_.end() ? kNone : it->second;
}

ComponentCoverage classify_components(const PolicyDoc& doc, const ComponentRules& rules) {
    ComponentCoverage coverage;
    for (std::size_t p = 0; p < doc.paragraphs.size(); ++p) {
        ParagraphView view = split_heading(doc.paragraphs[p].text);
        for (Component c : kAllComponents) {
            int score = 0;
            for (const auto& pattern : rules.patterns(c)) {
                std::string norm = " " + normalize_phrase_text(pattern.text) + " ";
                if (norm == "  ") continue;
                int body_hits = phrase_occurrences(view.body_padded, pattern.text);
                int heading_hits =
                        view.heading_norm.empty() ? 0 : phrase_occurrences(view.heading_padded, pattern.text);
                score += pattern.weight * (body_hits + 3 * heading_hits);
            }
            bool heading_match = false;
            if (!view.heading_norm.empty()) {
                const auto& hs = rules.headings(c);
                heading_match = std::find(hs.begin(), hs.end(), view.heading_norm) != hs.end();
            }
            if (score >= 2 || heading_match) {
                coverage.present.insert(c);
                coverage.paragraph_labels.emplace_back(p, c);
            }
        }
    }
    return coverage;
}

std::optional<int> extract_child_age(const PolicyDoc& doc, const ComponentCoverage& coverage) {
    if (!coverage.has(Component::Children)) return std::nullopt;

    std::optional<int> best;
    for (const auto& [para_idx, component] : coverage.paragraph_labels) {
        if (component != Component::Children) continue;
        const auto& para = doc.paragraphs[para_idx];

        std::string norm = normalize_phrase_text(para.text);
        std::vector<std::string> tokens;
        std::istringstream in(norm);
        std::string tok;
        while (in >> tok) tokens.push_back(tok);

        for (std::size_t i = 0; i < tokens.size(); ++i) {
            auto value = number_token_value(tokens[i]);
            if (!value || *value < 1 || *value > 21) continue;
            std::size_t lo = i >= 3 ? i - 3 : 0;
            std::size_t hi = std::min(tokens.size(), i + 4);
            bool near_age_term = false;
            for (std::size_t j = lo; j < hi && !near_age_term; ++j) {
                near_age_term = std::find(kAgeTerms.begin(), kAgeTerms.end(), tokens[j]) !=
                                kAgeTerms.end();
            }
            if (near_age_term && (!best || *value > *best)) best = *value;
        }
    }
    return best;
}

} // namespace vraudit::policy
