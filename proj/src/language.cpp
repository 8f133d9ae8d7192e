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

#include "vraudit/language.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "vraudit/error.hpp"

namespace vraudit::policy {

namespace {

std::vector<std::uint32_t> decode_utf8(std::string_view text) {
    std::vector<std::uint32_t> out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        std::uint32_t cp = 0;
        int extra = 0;
        if (c < 0x80) {
            cp = c;
        } else if ((c >> 5) == 0x6) {
            cp = c & 0x1F;
            extra = 1;
        } else if ((c >> 4) == 0xE) {
            cp = c & 0x0F;
            extra = 2;
        } else if ((c >> 3) == 0x1E) {
            cp = c & 0x07;
            extra = 3;
        } else {
            ++i;
            continue; // stray continuation byte
        }
        if (extra > 0 && i + extra >= text.size()) break; // truncated sequence
        bool ok = true;
        for (int k = 1; k <= extra; ++k) {
            unsigned char cc = static_cast<unsigned char>(text[i + k]);
            if ((cc >> 6) != 0x2) {
                ok = false;
                break;
            }
            cp = (cp << 6) | (cc & 0x3F);
        }
        if (!ok) {
            ++i;
            continue;
        }
        out.push_back(cp);
        i += 1 + extra;
    }
    return out;
}

bool is_kana(std::uint32_t cp) { return cp >= 0x3040 && cp <= 0x30FF; }
bool is_hangul(std::uint32_t cp) {
    return (cp >= 0xAC00 && cp <= 0xD7AF) || (cp >= 0x1100 && cp <= 0x11FF);
}
bool is_cjk_ideograph(std::uint32_t cp) { return cp >= 0x4E00 && cp <= 0x9FFF; }

bool is_letter_cp(std::uint32_t cp) {
    if (cp < 0x80) return std::isalpha(static_cast<int>(cp)) != 0;
    return true; // treat all non-ASCII code points as letters
}

/// Lowercased letters with everything else collapsed to single spaces.
std::vector<std::uint32_t> normalize(const std::vector<std::uint32_t>& cps) {
    std::vector<std::uint32_t> out;
    out.reserve(cps.size() + 2);
    out.push_back(' ');
    for (std::uint32_t cp : cps) {
        if (is_letter_cp(cp)) {
            if (cp < 0x80) cp = static_cast<std::uint32_t>(std::tolower(static_cast<int>(cp)));
            out.push_back(cp);
        } else if (out.back() != ' ') {
            out.push_back(' ');
        }
    }
    if (out.back() != ' ') out.push_back(' ');
    return out;
}

std::string trigram_key(const std::vector<std::uint32_t>& cps, std::size_t at) {
    std::string key;
    for (std::size_t k = 0; k < 3; ++k) {
        std::uint32_t cp = cps[at + k];
        // Encode each code point compactly; exact bytes only need to be
        // consistent between profile and document.
        key.push_back(static_cast<char>(cp & 0xFF));
        key.push_back(static_cast<char>((cp >> 8) & 0xFF));
        key.push_back(static_cast<char>((cp >> 16) & 0xFF));
    }
    return key;
}

} // namespace

LanguageDetector::Profile LanguageDetector::profile_of(std::string_view text) {
    auto cps = normalize(decode_utf8(text));
    std::unordered_map<std::string, int> counts;
    if (cps.size() >= 3) {
        for (std::size_t i = 0; i + 3 <= cps.size(); ++i) {
            std::string key = trigram_key(cps, i);
            bool all_space = cps[i] == ' ' && cps[i + 1] == ' ' && cps[i + 2] == ' ';
            if (!all_space) ++counts[key];
        }
    }
    std::vector<std::pair<std::string, int>> ranked(counts.begin(), counts.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    Profile profile;
    profile.reserve(std::min(ranked.size(), kProfileSize));
    for (std::size_t i = 0; i < ranked.size() && i < kProfileSize; ++i) {
        profile.push_back(ranked[i].first);
    }
    return profile;
}

LanguageDetector LanguageDetector::from_seeds(const std::map<std::string, std::string>& seeds) {
    LanguageDetector detector;
    for (const auto& [code, text] : seeds) {
        detector.profiles_[code] = profile_of(text);
    }
    return detector;
}

LanguageDetector LanguageDetector::load_dir(const std::string& dir) {
    std::map<std::string, std::string> seeds;
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
        if (entry.path().extension() != ".txt") continue;
        std::ifstream in(entry.path(), std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        seeds[entry.path().stem().string()] = ss.str();
    }
    if (ec || seeds.empty()) raise(Errc::IoError, "no language seeds in " + dir);
    return from_seeds(seeds);
}

std::string LanguageDetector::detect(std::string_view text) const {
    auto cps = decode_utf8(text);
    if (cps.size() < kMinCodePoints) return "Unknown";

    std::size_t letters = 0, kana = 0, hangul = 0, cjk = 0;
    for (std::uint32_t cp : cps) {
        if (!is_letter_cp(cp)) continue;
        ++letters;
        if (is_kana(cp)) ++kana;
        else if (is_hangul(cp)) ++hangul;
        else if (is_cjk_ideograph(cp)) ++cjk;
    }
    if (letters > 0) {
        if (kana * 20 >= letters) return "ja";       // >=5% kana
        if (hangul * 10 >= letters * 3) return "ko"; // >=30% hangul
        if (cjk * 2 >= letters) return "zh";         // >=50% ideographs
    }

    Profile doc_profile = profile_of(text);
    if (doc_profile.empty()) return "Unknown";

    std::string best_code = "Unknown";
    long long best_distance = -1;
    for (const auto& [code, profile] : profiles_) {
        std::unordered_map<std::string_view, std::size_t> rank;
        for (std::size_t i = 0; i < profile.size(); ++i) rank[profile[i]] = i;
        long long distance = 0;
        for (std::size_t i = 0; i < doc_profile.size(); ++i) {
            auto it = rank.find(doc_profile[i]);
            if (it == rank.end()) {
                distance += static_cast<long long>(kProfileSize);
            } else {
                long long d = static_cast<long long>(i) - static_cast<long long>(it->second);
                distance += d < 0 ? -d : d;
            }
        }
        if (best_distance < 0 || distance < best_distance) {
            best_distance = distance;
            best_code = code;
        }
    }
    return best_code;
}

} // namespace vraudit::policy
