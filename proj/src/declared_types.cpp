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

#include "vraudit/declared_types.hpp"

#include <array>
#include <sstream>

namespace vraudit::policy {

namespace {

const std::array<std::string_view, 6> kCollectionStems = {
        "collect", "gather", "obtain", "record", "process", "receiv"};

const std::array<std::string_view, 3> kVagueTerms = {
        "biometric data", "sensor data", "game interaction data"};

bool has_collection_verb(const std::string& normalized_sentence) {
    std::istringstream in(normalized_sentence);
    std::string token;
    while (in >> token) {
        for (auto stem : kCollectionStems) {
            if (token.rfind(stem, 0) == 0) return true;
        }
    }
    return false;
}

} // namespace

DeclaredSet extract_declared_datatypes(const PolicyDoc& doc, const ComponentCoverage& coverage,
                                       const catalog::SensitivityCatalog& catalog) {
    DeclaredSet declared;
    for (const auto& [para_idx, component] : coverage.paragraph_labels) {
        if (component != Component::Collect) continue;
        const auto& para = doc.paragraphs[para_idx];
        for (std::size_t s = para.first_sentence; s < para.first_sentence + para.sentence_count;
             ++s) {
            const auto& sentence = doc.sentences[s];
            std::string norm = normalize_phrase_text(sentence.text);
            if (!has_collection_verb(norm)) continue;

            bool specific_here = false;
            for (const auto& [type, phrases] : catalog.policy_corpus()) {
                for (const auto& phrase : phrases) {
                    if (phrase_in_text(sentence.text, phrase)) {
                        declared.specific.insert(type);
                        declared.evidence.emplace_back(sentence.text, phrase);
                        specific_here = true;
                    }
                }
            }
            if (!specific_here) {
                for (auto term : kVagueTerms) {
                    if (phrase_in_text(sentence.text, term)) {
                        declared.vague = true;
                        declared.evidence.emplace_back(sentence.text, std::string(term));
                        break;
                    }
                }
            }
        }
    }
    return declared;
}

} // namespace vraudit::policy
