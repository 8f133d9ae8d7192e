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
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vraudit/bytes.hpp"
#include "vraudit/policy_doc.hpp"

namespace vraudit::policy {

/// The ten privacy-policy content components (COOKIE intentionally absent:
/// VR apps have no browser cookies to disclose).
enum class Component {
    Collect,
    Share,
    Security,
    Right,
    Children,
    Region,
    Update,
    Provider,
    Retention,
    DataUse,
};

inline constexpr Component kAllComponents[] = {
        Component::Collect, Component::Share,  Component::Security,  Component::Right,
        Component::Children, Component::Region, Component::Update,    Component::Provider,
        Component::Retention, Component::DataUse};

const char* component_name(Component c);
std::optional<Component> component_from(std::string_view name);

/// Keyword rules per component, shipped as a JSON data file:
///   { "COLLECT": { "headings": ["information we collect", ...],
///                  "patterns": [{"text": "we collect", "weight": 2}, ...] },
///     ... }
/// Weights default to 1 when omitted.
class ComponentRules {
public:
    struct Pattern {
        std::string text;
        int weight = 1;
    };

    static ComponentRules load(BytesView json_text);
    static ComponentRules load_file(const std::string& path);

    const std::vector<Pattern>& patterns(Component c) const;
    const std::vector<std::string>& headings(Component c) const;

private:
    std::map<Component, std::vector<Pattern>> patterns_;
    std::map<Component, std::vector<std::string>> headings_;
};

struct ComponentCoverage {
    std::set<Component> present;
    std::vector<std::pair<std::size_t, Component>> paragraph_labels;

    bool has(Component c) const { return present.count(c) != 0; }
};

/// Rule-based paragraph labeling: a paragraph receives every component whose
/// score reaches 2, where a pattern hit contributes its weight (tripled when
/// it lands in the paragraph's heading line), or whose heading equals one of
/// the component's headings.
ComponentCoverage classify_components(const PolicyDoc& doc, const ComponentRules& rules);

/// Maximum age (range 1..21) found in CHILDREN paragraphs, where the number —
/// a digit token or thirteen/sixteen/eighteen — sits within three tokens of
/// "years", "age" or "old".
std::optional<int> extract_child_age(const PolicyDoc& doc, const ComponentCoverage& coverage);

} // namespace vraudit::policy
