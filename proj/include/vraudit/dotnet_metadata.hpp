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

#include "vraudit/bytes.hpp"

namespace vraudit::unity {

/// Extracts every TypeRef, TypeDef, MethodDef and MemberRef name from a .NET
/// assembly's metadata tables, resolved through the #Strings heap. Types are
/// rendered "Namespace.Type" (plain "Type" without a namespace); members as
/// "Namespace.Type::Member". MemberRefs whose parent is not a type (module
/// refs, method specs) surface as the bare member name.
std::set<std::string> parse_dotnet_names(BytesView data);

} // namespace vraudit::unity
