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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vraudit/error.hpp"

namespace vraudit {

using Bytes = std::vector<std::uint8_t>;
using BytesView = std::span<const std::uint8_t>;

/// Bounds-checked little-endian cursor over a byte buffer. Every file format
/// in this project (zip, AXML, PE, ELF, pak, metadata) is little-endian.
class ByteReader {
public:
    ByteReader(BytesView data, Errc overrun_error)
        : data_(data), overrun_(overrun_error) {}

    std::size_t pos() const { return pos_; }
    std::size_t size() const { return data_.size(); }
    std::size_t remaining() const { return data_.size() - pos_; }

    void seek(std::size_t pos) {
        if (pos > data_.size()) overrun("seek past end of data");
        pos_ = pos;
    }

    void skip(std::size_t n) {
        require(n);
        pos_ += n;
    }

    std::uint8_t u8() { return take<1>()[0]; }

    std::uint16_t u16() {
        auto b = take<2>();
        return static_cast<std::uint16_t>(b[0] | (b[1] << 8));
    }

    std::uint32_t u32() {
        auto b = take<4>();
        return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
               (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
    }

    std::uint64_t u64() {
        std::uint64_t lo = u32();
        std::uint64_t hi = u32();
        return lo | (hi << 32);
    }

    BytesView bytes(std::size_t n) {
        require(n);
        BytesView out = data_.subspan(pos_, n);
        pos_ += n;
        return out;
    }

    std::string ascii(std::size_t n) {
        BytesView b = bytes(n);
        return std::string(reinterpret_cast<const char*>(b.data()), b.size());
    }

    [[noreturn]] void overrun(const std::string& what) const { raise(overrun_, what); }

private:
    template <std::size_t N>
    std::span<const std::uint8_t, N> take() {
        require(N);
        auto out = data_.subspan(pos_).first<N>();
        pos_ += N;
        return out;
    }

    void require(std::size_t n) const {
        if (n > remaining()) overrun("read past end of data");
    }

    BytesView data_;
    std::size_t pos_ = 0;
    Errc overrun_;
};

/// Little-endian byte buffer builder, used by serializers and fixture writers.
class ByteWriter {
public:
    void u8(std::uint8_t v) { out_.push_back(v); }

    void u16(std::uint16_t v) {
        out_.push_back(static_cast<std::uint8_t>(v));
        out_.push_back(static_cast<std::uint8_t>(v >> 8));
    }

    void u32(std::uint32_t v) {
        u16(static_cast<std::uint16_t>(v));
        u16(static_cast<std::uint16_t>(v >> 16));
    }

    void u64(std::uint64_t v) {
        u32(static_cast<std::uint32_t>(v));
        u32(static_cast<std::uint32_t>(v >> 32));
    }

    void bytes(BytesView data) { out_.insert(out_.end(), data.begin(), data.end()); }

    void ascii(std::string_view s) {
        out_.insert(out_.end(), s.begin(), s.end());
    }

    void fill(std::size_t n, std::uint8_t value = 0) { out_.insert(out_.end(), n, value); }

    void patch_u32(std::size_t at, std::uint32_t v) {
        for (int i = 0; i < 4; ++i) out_[at + i] = static_cast<std::uint8_t>(v >> (8 * i));
    }

    std::size_t size() const { return out_.size(); }
    Bytes take() { return std::move(out_); }
    const Bytes& data() const { return out_; }

private:
    Bytes out_;
};

inline BytesView as_bytes(const std::string& s) {
    return BytesView(reinterpret_cast<const std::uint8_t*>(s.data()), s.size());
}

} // namespace vraudit
