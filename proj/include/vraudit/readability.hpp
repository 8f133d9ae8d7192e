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

#include "vraudit/policy_doc.hpp"

namespace vraudit::policy {

/// Word/sentence complexity and document-structure metrics.
///
/// Formulas:
///   ARI  = 4.71*(letters/words) + 0.5*(words/sentences) - 21.43
///   FRES = 206.835 - 1.015*(words/sentences) - 84.6*(syllables/words)
///   LIX  = words/sentences + 100*(long words/words), long = more than 6 letters
/// Letters are alphanumeric characters inside words. Reading and speaking
/// times assume 238 and 130 words per minute, reported in seconds.
struct ReadabilityReport {
    double ari = 0;
    double fres = 0;
    double lix = 0;
    double lpw = 0; // letters per word
    double spw = 0; // syllables per word
    double wps = 0; // words per sentence
    long long sc = 0;
    long long wc = 0;
    double rt_seconds = 0;
    double st_seconds = 0;
};

/// Syllable heuristic: count runs of vowels (aeiouy, case-insensitive),
/// subtract a silent trailing 'e' unless the word ends in "le", minimum 1.
int count_syllables(std::string_view word);

int count_letters(std::string_view word);

ReadabilityReport readability(const PolicyDoc& doc);

} // namespace vraudit::policy
