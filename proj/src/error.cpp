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

#include "vraudit/error.hpp"

namespace vraudit {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::NotAZip: return "NotAZip";
    case Errc::TruncatedArchive: return "TruncatedArchive";
    case Errc::IoError: return "IoError";
    case Errc::EntryNotFound: return "EntryNotFound";
    case Errc::UnsupportedCompression: return "UnsupportedCompression";
    case Errc::CorruptEntry: return "CorruptEntry";
    case Errc::MalformedXml: return "MalformedXml";
    case Errc::UnsupportedChunkVersion: return "UnsupportedChunkVersion";
    case Errc::MissingManifestElement: return "MissingManifestElement";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::TruncatedHeader: return "TruncatedHeader";
    case Errc::NotPe: return "NotPe";
    case Errc::NoCliHeader: return "NoCliHeader";
    case Errc::CorruptMetadata: return "CorruptMetadata";
    case Errc::NotElf: return "NotElf";
    case Errc::NoTextSection: return "NoTextSection";
    case Errc::WrongClassOrEndianness: return "WrongClassOrEndianness";
    case Errc::NoPakEntry: return "NoPakEntry";
    case Errc::MultiplePakEntries: return "MultiplePakEntries";
    case Errc::BadFooterMagic: return "BadFooterMagic";
    case Errc::EncryptedIndexUnsupported: return "EncryptedIndexUnsupported";
    case Errc::IndexOutOfBounds: return "IndexOutOfBounds";
    case Errc::UnsupportedPakVersion: return "UnsupportedPakVersion";
    case Errc::CompressedEntryUnsupported: return "CompressedEntryUnsupported";
    case Errc::MalformedIni: return "MalformedIni";
    case Errc::MalformedPluginJson: return "MalformedPluginJson";
    case Errc::SchemaViolation: return "SchemaViolation";
    case Errc::DuplicateRule: return "DuplicateRule";
    case Errc::UnknownDataType: return "UnknownDataType";
    case Errc::UnknownStore: return "UnknownStore";
    case Errc::EmptyDocument: return "EmptyDocument";
    case Errc::InvalidUrl: return "InvalidUrl";
    case Errc::EmptyRunSet: return "EmptyRunSet";
    case Errc::ConfigError: return "ConfigError";
    }
    return "UnknownError";
}

} // namespace vraudit
