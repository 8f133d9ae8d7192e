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

#include <string>
#include <vector>

#include "vraudit/catalog.hpp"

namespace vraudit {

/// One observed access to a VR-sensitive data category, with the trail that
/// led there: a call path for IL2CPP graphs, or a single element (API name,
/// module name, or ini key) in presence-only and config modes.
struct AccessEvidence {
    catalog::DataType data_type;
    std::string api_name;
    std::vector<std::string> path;

    bool operator==(const AccessEvidence&) const = default;
};

} // namespace vraudit
