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
#include <string>
#include <vector>

namespace vraudit::policy {

/// Character-trigram language identification with out-of-place rank distance
/// over shipped seed texts (en, de, fr, es, vi). CJK scripts short-circuit on
/// Unicode block majority: kana implies ja, hangul implies ko, and a CJK
/// ideograph majority implies zh. Inputs shorter than 40 code points return
/// "Unknown".
class LanguageDetector {
public:
    /// Seeds live in `<dir>/<code>.txt`.
    static LanguageDetector load_dir(const std::string& dir);
    static LanguageDetector from_seeds(const std::map<std::string, std::string>& seeds);

    std::string detect(std::string_view text) const;

    static constexpr std::size_t kMinCodePoints = 40;
    static constexpr std::size_t kProfileSize = 300;

private:
    using Profile = std::vector<std::string>; // trigram, rank order

    static Profile profile_of(std::string_view text);

    std::map<std::string, Profile> profiles_;
};

} // namespace vraudit::policy
