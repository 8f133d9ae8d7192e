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

#include <stdexcept>
#include <string>
#include <string_view>

namespace vraudit {

/// Typed error codes for every failure the toolkit can report. Values that
/// are part of normal results (EngineKind::Unknown, ProbeStatus::Timeout, …)
/// are not errors and do not appear here.
enum class Errc {
    // zip / apk container
    NotAZip,
    TruncatedArchive,
    IoError,
    EntryNotFound,
    UnsupportedCompression,
    CorruptEntry,
    // manifest
    MalformedXml,
    UnsupportedChunkVersion,
    MissingManifestElement,
    // unity metadata
    EmptyInput,
    TruncatedHeader,
    // .NET assemblies
    NotPe,
    NoCliHeader,
    CorruptMetadata,
    // ELF / call graph
    NotElf,
    NoTextSection,
    WrongClassOrEndianness,
    // unreal
    NoPakEntry,
    MultiplePakEntries,
    BadFooterMagic,
    EncryptedIndexUnsupported,
    IndexOutOfBounds,
    UnsupportedPakVersion,
    CompressedEntryUnsupported,
    MalformedIni,
    MalformedPluginJson,
    // catalog / records
    SchemaViolation,
    DuplicateRule,
    UnknownDataType,
    UnknownStore,
    // policy
    EmptyDocument,
    // web
    InvalidUrl,
    // reporting / cli
    EmptyRunSet,
    ConfigError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message),
          code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace vraudit
