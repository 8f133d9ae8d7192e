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

#include <functional>
#include <optional>
#include <string_view>

#include "vraudit/bytes.hpp"
#include "vraudit/error.hpp"

namespace testsupport {

inline vraudit::Bytes ascii_bytes(std::string_view s) {
    return vraudit::Bytes(s.begin(), s.end());
}

/// The Errc a callable throws, or nullopt when it returns normally.
inline std::optional<vraudit::Errc> thrown_code(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const vraudit::Error& e) {
        return e.code();
    }
    return std::nullopt;
}

} // namespace testsupport
