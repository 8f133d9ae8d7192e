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

#include "vraudit/policy_doc.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace vraudit::policy {

namespace {

bool is_word_char(unsigned char c) {
    return std::isalnum(c) || c == '\'' || c == '-' || c >= 0x80;
}

bool is_alnum_like(unsigned char c) { return std::isalnum(c) || c >= 0x80; }

// Dot-protected abbreviations, lowercase, without the final dot.
const std::array<std::string_view, 16> kAbbreviations = {
        "e.g", "i.e", "etc", "inc", "ltd", "co", "corp", "mr",
        "mrs", "ms", "dr", "prof", "vs", "st", "u.s", "u.k",
};

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> words;
    std::size_t i = 0;
    while (i < text.size()) {
        if (!is_word_char(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        bool has_alnum = false;
        while (i < text.size() && is_word_char(static_cast<unsigned char>(text[i]))) {
            if (is_alnum_like(static_cast<unsigned char>(text[i]))) has_alnum = true;
            ++i;
        }
        if (has_alnum) words.emplace_back(text.substr(start, i - start));
    }
    return words;
}

// The word (or dotted initialism, "e.g") immediately before position `at`.
std::string preceding_token(std::string_view text, std::size_t at) {
    std::size_t end = at;
    std::size_t start = end;
    while (start > 0) {
        unsigned char c = static_cast<unsigned char>(text[start - 1]);
        if (is_word_char(c) || (c == '.' && start >= 2 &&
                                is_word_char(static_cast<unsigned char>(text[start - 2])))) {
            --start;
        } else {
            break;
        }
    }
    return std::string(text.substr(start, end - start));
}

bool protected_abbreviation(std::string_view text, std::size_t dot_at) {
    std::string token = lower(preceding_token(text, dot_at));
    if (token.size() == 1 && std::isalpha(static_cast<unsigned char>(token[0]))) {
        return true; // initials, and the inner dots of e.g. / i.e.
    }
    return std::find(kAbbreviations.begin(), kAbbreviations.end(), token) != kAbbreviations.end();
}

std::vector<Sentence> split_sentences(std::string_view text) {
    std::vector<Sentence> sentences;
    std::size_t start = 0;
    auto emit = [&](std::size_t end) {
        std::string_view piece = text.substr(start, end - start);
        // trim
        std::size_t b = 0, e = piece.size();
        while (b < e && std::isspace(static_cast<unsigned char>(piece[b]))) ++b;
        while (e > b && std::isspace(static_cast<unsigned char>(piece[e - 1]))) --e;
        piece = piece.substr(b, e - b);
        if (!piece.empty()) {
            Sentence s;
            s.text = std::string(piece);
            s.words = tokenize(piece);
            if (!s.words.empty()) sentences.push_back(std::move(s));
        }
        start = end;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c != '.' && c != '!' && c != '?') continue;
        if (c == '.' && protected_abbreviation(text, i)) continue;
        std::size_t j = i + 1;
        while (j < text.size() && (text[j] == '.' || text[j] == '!' || text[j] == '?')) ++j;
        std::size_t k = j;
        while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
        bool at_end = k >= text.size();
        bool capital_next = !at_end && k > j && std::isupper(static_cast<unsigned char>(text[k]));
        if (at_end || capital_next) {
            emit(j);
            i = j - 1;
        }
    }
    emit(text.size());
    return sentences;
}

} // namespace

std::size_t PolicyDoc::word_count() const {
    std::size_t n = 0;
    for (const auto& s : sentences) n += s.words.size();
    return n;
}

PolicyDoc segment(std::string_view text, std::optional<std::string> source_url) {
    PolicyDoc doc;
    doc.raw_text = std::string(text);
    doc.source_url = std::move(source_url);

    // Paragraphs split on blank lines (whitespace-only lines count as blank).
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t para_start = pos;
        std::size_t para_end = text.size();
        std::size_t scan = pos;
        while (scan < text.size()) {
            std::size_t nl = text.find('\n', scan);
            if (nl == std::string_view::npos) break;
            std::size_t line_start = nl + 1;
            std::size_t line_end = text.find('\n', line_start);
            if (line_end == std::string_view::npos) line_end = text.size();
            std::string_view line = text.substr(line_start, line_end - line_start);
            bool blank = std::all_of(line.begin(), line.end(), [](unsigned char c) {
                return std::isspace(c);
            });
            if (blank) {
                para_end = nl;
                pos = line_end + 1;
                break;
            }
            scan = line_start;
        }
        if (para_end == text.size()) pos = text.size() + 1;

        std::string_view para = text.substr(para_start, para_end - para_start);
        bool all_blank = std::all_of(para.begin(), para.end(),
                                     [](unsigned char c) { return std::isspace(c); });
        if (!para.empty() && !all_blank) {
            Paragraph p;
            p.text = std::string(para);
            p.first_sentence = doc.sentences.size();
            auto sentences = split_sentences(para);
            p.sentence_count = sentences.size();
            for (auto& s : sentences) doc.sentences.push_back(std::move(s));
            doc.paragraphs.push_back(std::move(p));
        }
    }
    return doc;
}

const char* validity_name(Validity v) {
    switch (v) {
    case Validity::Valid: return "Valid";
    case Validity::TooShort: return "TooShort";
    case Validity::StoreGeneric: return "StoreGeneric";
    }
    return "?";
}

Validity validity_check(const PolicyDoc& doc,
                        const std::set<std::string>& store_policy_url_prefixes) {
    if (doc.source_url) {
        for (const auto& prefix : store_policy_url_prefixes) {
            if (!prefix.empty() && doc.source_url->rfind(prefix, 0) == 0) {
                return Validity::StoreGeneric;
            }
        }
    }
    if (doc.word_count() < 100) return Validity::TooShort;
    return Validity::Valid;
}

std::string normalize_phrase_text(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool last_space = true;
    for (char ch : text) {
        unsigned char c = static_cast<unsigned char>(ch);
        if (is_alnum_like(c) || c == '\'') {
            out.push_back(static_cast<char>(std::tolower(c)));
            last_space = false;
        } else if (!last_space) {
            out.push_back(' ');
            last_space = true;
        }
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

bool phrase_in_text(std::string_view text, std::string_view phrase) {
    std::string t = " " + normalize_phrase_text(text) + " ";
    std::string p = " " + normalize_phrase_text(phrase) + " ";
    if (p == "  ") return false;
    return t.find(p) != std::string::npos;
}

SpecificityResult specificity_check(const PolicyDoc& doc, const std::string& app_name) {
    SpecificityResult result;
    static const std::vector<std::string> kVrTerms = {
            "virtual reality", "VR", "immersive", "head-mounted display"};
    for (const auto& term : kVrTerms) {
        if (phrase_in_text(doc.raw_text, term)) {
            result.is_vr_specific = true;
            result.hits.push_back(term);
        }
    }
    if (!app_name.empty() && phrase_in_text(doc.raw_text, app_name)) {
        result.is_vr_specific = true;
        result.hits.push_back(app_name);
    }
    return result;
}

} // namespace vraudit::policy
