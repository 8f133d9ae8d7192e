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

#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "test_util.hpp"
#include "vraudit/engine.hpp"
#include "vraudit/manifest.hpp"
#include "vraudit/zip_archive.hpp"

using namespace vraudit;
using apk::ApkPackage;
using testsupport::ManifestSpec;
using testsupport::ZipEntrySpec;

using testsupport::ascii_bytes;

namespace {

Errc code_of(const std::function<void()>& fn) {
    auto code = testsupport::thrown_code(fn);
    REQUIRE(code.has_value());
    return *code;
}

} // namespace

TEST_CASE("open_apk lists entries without loading payloads") {
    Bytes zip = testsupport::write_zip({
            {"AndroidManifest.xml", ascii_bytes("<manifest/>"), false},
            {"lib/arm64-v8a/libUE4.so", Bytes(64, 0x7F), true},
    });
    auto pkg = ApkPackage::from_bytes(zip);
    CHECK(pkg.entries().size() == 2);
    CHECK(pkg.contains("AndroidManifest.xml"));
    CHECK(pkg.entries().at("lib/arm64-v8a/libUE4.so").uncompressed_size == 64);
}

TEST_CASE("empty zip has zero entries") {
    auto pkg = ApkPackage::from_bytes(testsupport::write_zip({}));
    CHECK(pkg.entries().empty());
}

TEST_CASE("extract handles stored and deflate entries") {
    Bytes zeros(10 * 1024, 0);
    Bytes zip = testsupport::write_zip({
            {"stored.txt", ascii_bytes("abc"), false},
            {"deflated.bin", zeros, true},
    });
    auto pkg = ApkPackage::from_bytes(zip);
    CHECK(pkg.extract("stored.txt") == ascii_bytes("abc"));
    CHECK(pkg.extract("deflated.bin") == zeros);
}

TEST_CASE("missing entry raises EntryNotFound") {
    auto pkg = ApkPackage::from_bytes(testsupport::write_zip({{"a", ascii_bytes("x"), false}}));
    CHECK(code_of([&] { pkg.extract("missing.txt"); }) == Errc::EntryNotFound);
}

TEST_CASE("non-zip data raises NotAZip") {
    CHECK(code_of([] { ApkPackage::from_bytes(ascii_bytes("this is not a zip archive")); }) ==
          Errc::NotAZip);
}

TEST_CASE("truncated archive is distinguished from junk") {
    Bytes zip = testsupport::write_zip({{"a.txt", ascii_bytes("hello"), true}});
    Bytes cut(zip.begin(), zip.begin() + 20); // local header only
    CHECK(code_of([&] { ApkPackage::from_bytes(cut); }) == Errc::TruncatedArchive);
}

TEST_CASE("corrupt payload fails the crc check") {
    Bytes zip = testsupport::write_zip({{"a.txt", ascii_bytes("hello world"), false}});
    // flip a payload byte (local header is 30 + 5 name bytes)
    zip[35] ^= 0xFF;
    auto pkg = ApkPackage::from_bytes(zip);
    CHECK(code_of([&] { pkg.extract("a.txt"); }) == Errc::CorruptEntry);
}

TEST_CASE("zip round-trip property over random archives") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 40; ++iter) {
        std::uniform_int_distribution<int> count_dist(0, 6);
        std::uniform_int_distribution<int> size_dist(0, 2000);
        std::vector<ZipEntrySpec> specs;
        int n = count_dist(rng);
        for (int i = 0; i < n; ++i) {
            ZipEntrySpec spec;
            spec.path = "dir" + std::to_string(i % 3) + "/file" + std::to_string(i);
            spec.data.resize(size_dist(rng));
            for (auto& b : spec.data) b = static_cast<std::uint8_t>(rng());
            spec.deflate = rng() % 2 == 0;
            specs.push_back(std::move(spec));
        }
        auto pkg = ApkPackage::from_bytes(testsupport::write_zip(specs));
        REQUIRE(pkg.entries().size() == specs.size());
        for (const auto& spec : specs) {
            CHECK(pkg.extract(spec.path) == spec.data);
        }
    }
}

TEST_CASE("plaintext manifest parsing") {
    ManifestSpec spec;
    spec.package_name = "com.example.vrapp";
    spec.permissions = {"com.picovr.permission.FACE_TRACKING"};
    std::string xml = testsupport::write_text_manifest(spec);
    auto info = apk::parse_manifest(as_bytes(xml));
    CHECK_FALSE(info.is_binary_xml);
    CHECK(info.package_name == "com.example.vrapp");
    CHECK(info.permissions == std::set<std::string>{"com.picovr.permission.FACE_TRACKING"});
}

TEST_CASE("manifest without permissions yields the empty set") {
    ManifestSpec spec;
    spec.package_name = "com.example.none";
    std::string xml = testsupport::write_text_manifest(spec);
    auto info = apk::parse_manifest(as_bytes(xml));
    CHECK(info.permissions.empty());
}

TEST_CASE("binary manifest parses to the same result as plaintext") {
    ManifestSpec spec;
    spec.package_name = "com.example.binary";
    spec.permissions = {"android.permission.CAMERA", "com.oculus.permission.HAND_TRACKING"};
    auto from_text = apk::parse_manifest(as_bytes(testsupport::write_text_manifest(spec)));
    for (bool utf8 : {false, true}) {
        CAPTURE(utf8);
        Bytes axml = testsupport::write_axml_manifest(spec, utf8);
        auto from_binary = apk::parse_manifest(axml);
        CHECK(from_binary.is_binary_xml);
        CHECK(from_binary.package_name == from_text.package_name);
        CHECK(from_binary.permissions == from_text.permissions);
    }
}

TEST_CASE("duplicate permissions are deduplicated silently") {
    std::string xml =
            "<manifest package=\"p\">"
            "<uses-permission android:name=\"android.permission.CAMERA\"/>"
            "<uses-permission android:name=\"android.permission.CAMERA\"/>"
            "</manifest>";
    auto info = apk::parse_manifest(as_bytes(xml));
    CHECK(info.permissions.size() == 1);
}

TEST_CASE("manifest parse failures carry typed errors") {
    CHECK(code_of([] { apk::parse_manifest(as_bytes(std::string("<wrong/>"))); }) ==
          Errc::MissingManifestElement);
    CHECK(code_of([] { apk::parse_manifest(as_bytes(std::string("<manifest>"))); }) ==
          Errc::MalformedXml);
}

TEST_CASE("engine detection rules and precedence") {
    auto detect = [](std::vector<ZipEntrySpec> specs) {
        return apk::detect_engine(ApkPackage::from_bytes(testsupport::write_zip(specs)));
    };
    Bytes pe = {'M', 'Z', 0, 0};
    CHECK(detect({{"lib/arm64-v8a/libil2cpp.so", Bytes(8, 0x7F), false}}) ==
          apk::EngineKind::UnityIl2cpp);
    CHECK(detect({{"lib/arm64-v8a/libUE4.so", Bytes(8, 0x7F), false}}) == apk::EngineKind::Unreal);
    CHECK(detect({{"config/game.pak", Bytes(8, 1), false}}) == apk::EngineKind::Unreal);
    CHECK(detect({{"assets/bin/Managed/Assembly-CSharp.dll", pe, false}}) ==
          apk::EngineKind::UnityMono);
    CHECK(detect({{"assets/readme.txt", ascii_bytes("hi"), false}}) == apk::EngineKind::Unknown);
    // precedence: Unreal beats il2cpp beats mono
    CHECK(detect({{"lib/arm64-v8a/libil2cpp.so", Bytes(8, 1), false},
                  {"lib/arm64-v8a/libUE4.so", Bytes(8, 1), false},
                  {"assets/a.dll", pe, false}}) == apk::EngineKind::Unreal);
    CHECK(detect({{"lib/arm64-v8a/libil2cpp.so", Bytes(8, 1), false},
                  {"assets/a.dll", pe, false}}) == apk::EngineKind::UnityIl2cpp);
}
