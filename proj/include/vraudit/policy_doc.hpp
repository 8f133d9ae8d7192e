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

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace vraudit::policy {

/// Tokenization contract (shared with the test oracles):
///   - a word is a maximal run of letters/digits/apostrophes/hyphens that
///     contains at least one letter or digit; bytes >= 0x80 count as letters
///   - sentences split at . ! ? followed by whitespace and a capital, or at
///     end of text; a dot after a known abbreviation (e.g., i.e., Inc., Dr.,
///     …) or a single letter never splits
///   - paragraphs are blank-line separated; sentences never span paragraphs
struct Sentence {
    std::string text;
    std::vector<std::string> words;
};

struct Paragraph {
    std::string text;
    std::size_t first_sentence = 0; // index into PolicyDoc::sentences
    std::size_t sentence_count = 0;
};

struct PolicyDoc {
    std::string raw_text;
    std::optional<std::string> source_url;
    std::vector<Sentence> sentences;
    std::vector<Paragraph> paragraphs;

    std::size_t word_count() const;
    std::size_t sentence_count() const { return sentences.size(); }
};

PolicyDoc segment(std::string_view text, std::optional<std::string> source_url = std::nullopt);

enum class Validity { Valid, TooShort, StoreGeneric };

const char* validity_name(Validity v);

/// TooShort below 100 words; StoreGeneric (which wins over TooShort) when the
/// source URL prefix-matches a store's own policy page.
Validity validity_check(const PolicyDoc& doc, const std::set<std::string>& store_policy_url_prefixes);

struct SpecificityResult {
    bool is_vr_specific = false;
    std::vector<std::string> hits;
};

/// Looks for "virtual reality", standalone "VR", "immersive", "head-mounted
/// display" or the app's own name, case-insensitively with hyphens treated
/// as spaces.
SpecificityResult specificity_check(const PolicyDoc& doc, const std::string& app_name);

/// Lowercase, hyphens and any punctuation to spaces, whitespace collapsed.
/// The normal form behind phrase matching here and in declared-type search.
std::string normalize_phrase_text(std::string_view text);

/// True when `phrase` occurs in `text` on word boundaries, both normalized.
bool phrase_in_text(std::string_view text, std::string_view phrase);

} // namespace vraudit::policy
