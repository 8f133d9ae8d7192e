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

#include "vraudit/readability.hpp"

#include <cctype>

#include "vraudit/error.hpp"

namespace vraudit::policy {

namespace {

bool is_vowel(char c) {
    switch (std::tolower(static_cast<unsigned char>(c))) {
    case 'a': case 'e': case 'i': case 'o': case 'u': case 'y':
        return true;
    default:
        return false;
    }
}

bool is_letterish(unsigned char c) { return std::isalnum(c) || c >= 0x80; }

char lower_ch(char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }

} // namespace

int count_letters(std::string_view word) {
    int n = 0;
    for (char c : word) {
        if (is_letterish(static_cast<unsigned char>(c))) ++n;
    }
    return n;
}

int count_syllables(std::string_view word) {
    int runs = 0;
    bool in_run = false;
    for (char c : word) {
        if (is_vowel(c)) {
            if (!in_run) ++runs;
            in_run = true;
        } else {
            in_run = false;
        }
    }
    if (word.size() >= 2 && lower_ch(word.back()) == 'e' &&
        lower_ch(word[word.size() - 2]) != 'l') {
        --runs;
    }
    return runs < 1 ? 1 : runs;
}

ReadabilityReport readability(const PolicyDoc& doc) {
    long long words = 0, sentences = static_cast<long long>(doc.sentences.size());
    long long letters = 0, syllables = 0, long_words = 0;
    for (const auto& sentence : doc.sentences) {
        for (const auto& word : sentence.words) {
            ++words;
            int l = count_letters(word);
            letters += l;
            syllables += count_syllables(word);
            if (l > 6) ++long_words;
        }
    }
    if (words == 0 || sentences == 0) raise(Errc::EmptyDocument, "no words to score");

    double w = static_cast<double>(words);
    double s = static_cast<double>(sentences);

    ReadabilityReport report;
    report.wc = words;
    report.sc = sentences;
    report.lpw = letters / w;
    report.spw = syllables / w;
    report.wps = w / s;
    report.ari = 4.71 * (letters / w) + 0.5 * (w / s) - 21.43;
    report.fres = 206.835 - 1.015 * (w / s) - 84.6 * (syllables / w);
    report.lix = w / s + 100.0 * (static_cast<double>(long_words) / w);
    report.rt_seconds = w / 238.0 * 60.0;
    report.st_seconds = w / 130.0 * 60.0;
    return report;
}

} // namespace vraudit::policy
