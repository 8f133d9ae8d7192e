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

#include <set>
#include <string>
#include <vector>

#include "vraudit/catalog.hpp"
#include "vraudit/components.hpp"
#include "vraudit/policy_doc.hpp"

namespace vraudit::policy {

/// VR data types a policy declares it collects. `vague` means a collection
/// sentence leaned on "biometric data", "sensor data" or "game interaction
/// data" without naming a specific type.
struct DeclaredSet {
    std::set<catalog::DataType> specific;
    bool vague = false;
    std::vector<std::pair<std::string, std::string>> evidence; // (sentence, phrase)
};

/// Scans COLLECT-labeled paragraphs: sentences holding a collection verb
/// (collect, gather, obtain, record, process, receive — matched by stem) are
/// searched for the catalog's corpus phrases.
DeclaredSet extract_declared_datatypes(const PolicyDoc& doc, const ComponentCoverage& coverage,
                                       const catalog::SensitivityCatalog& catalog);

} // namespace vraudit::policy
