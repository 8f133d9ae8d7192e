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

#include "vraudit/manifest.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <vector>

namespace vraudit::apk {

namespace {

// AXML chunk types (ResourceTypes.h layout, little-endian).
constexpr std::uint16_t kResXmlType = 0x0003;
constexpr std::uint16_t kResStringPoolType = 0x0001;
constexpr std::uint16_t kResXmlStartNamespace = 0x0100;
constexpr std::uint16_t kResXmlEndNamespace = 0x0101;
constexpr std::uint16_t kResXmlStartElement = 0x0102;
constexpr std::uint16_t kResXmlEndElement = 0x0103;
constexpr std::uint16_t kResXmlCdata = 0x0104;
constexpr std::uint16_t kResXmlResourceMap = 0x0180;

constexpr std::uint32_t kStringPoolUtf8Flag = 1u << 8;
constexpr std::uint32_t kNoEntry = 0xFFFFFFFF;
constexpr std::uint8_t kTypeString = 0x03;

void append_utf8(std::string& out, std::uint32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::vector<std::string> parse_string_pool(ByteReader& r, std::size_t chunk_start,
                                           std::uint32_t chunk_size) {
    std::uint32_t string_count = r.u32();
    std::uint32_t style_count = r.u32();
    std::uint32_t flags = r.u32();
    std::uint32_t strings_start = r.u32();
    r.u32(); // styles_start
    (void)style_count;

    std::vector<std::uint32_t> offsets(string_count);
    for (auto& off : offsets) off = r.u32();

    bool utf8 = (flags & kStringPoolUtf8Flag) != 0;
    std::vector<std::string> pool;
    pool.reserve(string_count);
    for (std::uint32_t off : offsets) {
        std::size_t at = chunk_start + strings_start + off;
        if (at >= chunk_start + chunk_size) raise(Errc::MalformedXml, "string offset out of pool");
        r.seek(at);
        std::string s;
        if (utf8) {
            // UTF-8 strings carry a char count then a byte count; lengths of
            // 0x80.. use a two-byte form.
            auto read_len = [&r]() -> std::uint32_t {
                std::uint32_t len = r.u8();
                if (len & 0x80) len = ((len & 0x7F) << 8) | r.u8();
                return len;
            };
            read_len();
            std::uint32_t byte_len = read_len();
            s = r.ascii(byte_len);
        } else {
            std::uint32_t len = r.u16();
            if (len & 0x8000) len = ((len & 0x7FFF) << 16) | r.u16();
            s.reserve(len);
            for (std::uint32_t i = 0; i < len; ++i) {
                std::uint32_t cp = r.u16();
                if (cp >= 0xD800 && cp <= 0xDBFF && i + 1 < len) {
                    std::uint32_t lo = r.u16();
                    ++i;
                    cp = 0x10000 + ((cp - 0xD800) << 10) + (lo - 0xDC00);
                }
                append_utf8(s, cp);
            }
        }
        pool.push_back(std::move(s));
    }
    return pool;
}

ManifestInfo parse_binary(BytesView data) {
    ByteReader r(data, Errc::MalformedXml);
    if (r.u16() != kResXmlType) raise(Errc::MalformedXml, "not a binary XML document");
    std::uint16_t header_size = r.u16();
    if (header_size != 8) raise(Errc::UnsupportedChunkVersion, "unexpected XML chunk header size");
    std::uint32_t doc_size = r.u32();
    if (doc_size > data.size()) raise(Errc::MalformedXml, "document size exceeds data");

    std::vector<std::string> pool;
    bool have_pool = false;

    ManifestInfo info;
    info.is_binary_xml = true;
    bool saw_manifest = false;

    std::size_t pos = header_size;
    while (pos + 8 <= doc_size) {
        r.seek(pos);
        std::uint16_t type = r.u16();
        std::uint16_t chunk_header = r.u16();
        std::uint32_t chunk_size = r.u32();
        if (chunk_size < 8 || pos + chunk_size > doc_size) {
            raise(Errc::MalformedXml, "chunk overruns document");
        }

        switch (type) {
        case kResStringPoolType: {
            if (chunk_header != 0x1C) {
                raise(Errc::UnsupportedChunkVersion, "unexpected string pool header size");
            }
            pool = parse_string_pool(r, pos, chunk_size);
            have_pool = true;
            break;
        }
        case kResXmlStartElement: {
            if (!have_pool) raise(Errc::MalformedXml, "element before string pool");
            if (chunk_header != 0x10) {
                raise(Errc::UnsupportedChunkVersion, "unexpected element header size");
            }
            // Node header (16 bytes) carries line number and comment; the
            // attribute extension starts at pos + header size.
            r.seek(pos + chunk_header);
            r.u32(); // element namespace
            std::uint32_t name_idx = r.u32();
            std::uint16_t attr_start = r.u16();
            std::uint16_t attr_size = r.u16();
            std::uint16_t attr_count = r.u16();
            r.u16(); // id index
            r.u16(); // class index
            r.u16(); // style index
            if (attr_size != 20) raise(Errc::UnsupportedChunkVersion, "unexpected attribute size");
            if (name_idx >= pool.size()) raise(Errc::MalformedXml, "element name out of pool");
            const std::string& element = pool[name_idx];

            // attr_start is relative to the extended header that follows the
            // node header (16 bytes in).
            auto attr_value = [&](std::size_t i) -> std::optional<std::pair<std::string, std::string>> {
                r.seek(pos + chunk_header + attr_start + i * attr_size);
                r.u32(); // attribute namespace
                std::uint32_t attr_name = r.u32();
                std::uint32_t raw_value = r.u32();
                r.u16(); // typed value size
                r.u8();  // res0
                std::uint8_t data_type = r.u8();
                std::uint32_t typed_data = r.u32();
                if (attr_name >= pool.size()) raise(Errc::MalformedXml, "attribute name out of pool");
                std::uint32_t value_idx = raw_value;
                if (value_idx == kNoEntry && data_type == kTypeString) value_idx = typed_data;
                if (value_idx == kNoEntry) return std::nullopt; // non-string attribute
                if (value_idx >= pool.size()) raise(Errc::MalformedXml, "attribute value out of pool");
                return std::make_pair(pool[attr_name], pool[value_idx]);
            };

            if (element == "manifest") {
                saw_manifest = true;
                for (std::size_t i = 0; i < attr_count; ++i) {
                    if (auto kv = attr_value(i); kv && kv->first == "package") {
                        info.package_name = kv->second;
                    }
                }
            } else if (element == "uses-permission") {
                for (std::size_t i = 0; i < attr_count; ++i) {
                    if (auto kv = attr_value(i); kv && kv->first == "name" && !kv->second.empty()) {
                        info.permissions.insert(kv->second);
                    }
                }
            }
            break;
        }
        case kResXmlStartNamespace:
        case kResXmlEndNamespace:
        case kResXmlEndElement:
        case kResXmlCdata:
        case kResXmlResourceMap:
            break;
        default:
            raise(Errc::MalformedXml, "unknown chunk type in binary XML");
        }
        pos += chunk_size;
    }

    if (!saw_manifest) raise(Errc::MissingManifestElement, "no <manifest> element");
    return info;
}

// ---------------------------------------------------------------------------
// Plain-text XML. A manifest only needs elements, attributes and the common
// entities, so this is a small recursive-descent scanner rather than a full
// XML implementation.

class TextXmlScanner {
public:
    explicit TextXmlScanner(std::string_view text) : text_(text) {}

    ManifestInfo run() {
        ManifestInfo info;
        bool saw_manifest = false;
        std::vector<std::string> stack;
        while (skip_to_tag()) {
            if (starts_with("<?")) {
                skip_past("?>");
            } else if (starts_with("<!--")) {
                skip_past("-->");
            } else if (starts_with("<!")) {
                skip_past(">");
            } else if (starts_with("</")) {
                pos_ += 2;
                std::string name = read_name();
                skip_ws();
                expect('>');
                if (stack.empty() || stack.back() != name) {
                    raise(Errc::MalformedXml, "mismatched closing tag " + name);
                }
                stack.pop_back();
            } else {
                ++pos_; // consume '<'
                std::string name = read_name();
                std::map<std::string, std::string> attrs;
                bool self_closing = false;
                for (;;) {
                    skip_ws();
                    if (eof()) raise(Errc::MalformedXml, "unterminated tag " + name);
                    if (peek() == '/') {
                        ++pos_;
                        expect('>');
                        self_closing = true;
                        break;
                    }
                    if (peek() == '>') {
                        ++pos_;
                        break;
                    }
                    std::string attr = read_name();
                    skip_ws();
                    expect('=');
                    skip_ws();
                    attrs[attr] = read_quoted();
                }
                if (name == "manifest") {
                    saw_manifest = true;
                    if (auto it = attrs.find("package"); it != attrs.end()) {
                        info.package_name = it->second;
                    }
                } else if (name == "uses-permission") {
                    if (auto it = attrs.find("android:name");
                        it != attrs.end() && !it->second.empty()) {
                        info.permissions.insert(it->second);
                    }
                }
                if (!self_closing) stack.push_back(name);
            }
        }
        if (!stack.empty()) raise(Errc::MalformedXml, "unclosed element " + stack.back());
        if (!saw_manifest) raise(Errc::MissingManifestElement, "no <manifest> element");
        return info;
    }

private:
    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    bool starts_with(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }

    bool skip_to_tag() {
        while (!eof() && peek() != '<') ++pos_;
        return !eof();
    }

    void skip_past(std::string_view closer) {
        auto at = text_.find(closer, pos_);
        if (at == std::string_view::npos) raise(Errc::MalformedXml, "unterminated construct");
        pos_ = at + closer.size();
    }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    void expect(char c) {
        if (eof() || peek() != c) raise(Errc::MalformedXml, std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string read_name() {
        std::size_t start = pos_;
        while (!eof()) {
            char c = peek();
            if (std::isalnum(static_cast<unsigned char>(c)) || c == ':' || c == '-' || c == '_' ||
                c == '.') {
                ++pos_;
            } else {
                break;
            }
        }
        if (pos_ == start) raise(Errc::MalformedXml, "expected a name");
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string read_quoted() {
        if (eof() || (peek() != '"' && peek() != '\'')) {
            raise(Errc::MalformedXml, "expected a quoted attribute value");
        }
        char quote = peek();
        ++pos_;
        std::string raw;
        while (!eof() && peek() != quote) raw.push_back(text_[pos_++]);
        expect(quote);
        return decode_entities(raw);
    }

    static std::string decode_entities(const std::string& raw) {
        std::string out;
        out.reserve(raw.size());
        for (std::size_t i = 0; i < raw.size();) {
            if (raw[i] != '&') {
                out.push_back(raw[i++]);
                continue;
            }
            auto end = raw.find(';', i);
            if (end == std::string::npos) raise(Errc::MalformedXml, "unterminated entity");
            std::string entity = raw.substr(i + 1, end - i - 1);
            if (entity == "amp") out.push_back('&');
            else if (entity == "lt") out.push_back('<');
            else if (entity == "gt") out.push_back('>');
            else if (entity == "quot") out.push_back('"');
            else if (entity == "apos") out.push_back('\'');
            else raise(Errc::MalformedXml, "unknown entity &" + entity + ";");
            i = end + 1;
        }
        return out;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

bool looks_like_binary_xml(BytesView data) {
    if (data.size() < 8) return false;
    std::uint16_t type = static_cast<std::uint16_t>(data[0] | (data[1] << 8));
    std::uint16_t header = static_cast<std::uint16_t>(data[2] | (data[3] << 8));
    return type == kResXmlType && header == 8;
}

ManifestInfo parse_manifest(BytesView data) {
    if (data.empty()) raise(Errc::MalformedXml, "empty manifest");
    if (looks_like_binary_xml(data)) return parse_binary(data);
    std::string_view text(reinterpret_cast<const char*>(data.data()), data.size());
    return TextXmlScanner(text).run();
}

} // namespace vraudit::apk
