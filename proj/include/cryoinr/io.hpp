#pragma once

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "cryoinr/error.hpp"

namespace cryoinr {

using Bytes = std::vector<uint8_t>;
using ByteSpan = std::span<const uint8_t>;

// All on-disk integers and floats are little-endian.
class ByteWriter {
public:
    void u8(uint8_t v) { buf_.push_back(v); }
    void u32(uint32_t v) {
        for (int i = 0; i < 4; ++i) buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
    }
    void u64(uint64_t v) {
        for (int i = 0; i < 8; ++i) buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
    }
    void i32(int32_t v) { u32(static_cast<uint32_t>(v)); }
    void f32(float v) {
        uint32_t bits;
        std::memcpy(&bits, &v, 4);
        u32(bits);
    }
    void bytes(ByteSpan s) { buf_.insert(buf_.end(), s.begin(), s.end()); }
    void bytes(const void* p, size_t n) {
        const auto* b = static_cast<const uint8_t*>(p);
        buf_.insert(buf_.end(), b, b + n);
    }
    void magic(const char tag[5]) { bytes(tag, 4); }

    size_t size() const { return buf_.size(); }
    Bytes take() { return std::move(buf_); }
    const Bytes& data() const { return buf_; }

    // patch a u64 written earlier
    void patch_u64(size_t offset, uint64_t v) {
        for (int i = 0; i < 8; ++i) buf_[offset + i] = static_cast<uint8_t>(v >> (8 * i));
    }
    void patch_u32(size_t offset, uint32_t v) {
        for (int i = 0; i < 4; ++i) buf_[offset + i] = static_cast<uint8_t>(v >> (8 * i));
    }

private:
    Bytes buf_;
};

class ByteReader {
public:
    explicit ByteReader(ByteSpan s) : data_(s) {}

    uint8_t u8() { return take(1)[0]; }
    uint32_t u32() {
        auto b = take(4);
        return static_cast<uint32_t>(b[0]) | (static_cast<uint32_t>(b[1]) << 8) |
               (static_cast<uint32_t>(b[2]) << 16) | (static_cast<uint32_t>(b[3]) << 24);
    }
    uint64_t u64() {
        uint64_t lo = u32();
        uint64_t hi = u32();
        return lo | (hi << 32);
    }
    int32_t i32() { return static_cast<int32_t>(u32()); }
    float f32() {
        uint32_t bits = u32();
        float v;
        std::memcpy(&v, &bits, 4);
        return v;
    }
    ByteSpan raw(size_t n) { return take(n); }
    void expect_magic(const char tag[5], const char* what) {
        auto b = take(4);
        if (std::memcmp(b.data(), tag, 4) != 0)
            throw CorruptStream(std::string(what) + ": bad magic");
    }

    size_t remaining() const { return data_.size() - pos_; }
    size_t pos() const { return pos_; }
    void seek(size_t p) {
        if (p > data_.size()) throw CorruptStream("seek past end");
        pos_ = p;
    }

private:
    ByteSpan take(size_t n) {
        if (pos_ + n > data_.size()) throw CorruptStream("unexpected end of stream");
        ByteSpan s = data_.subspan(pos_, n);
        pos_ += n;
        return s;
    }

    ByteSpan data_;
    size_t pos_ = 0;
};

uint32_t crc32_of(ByteSpan data);

Bytes read_file_bytes(const std::filesystem::path& path);

// write to a sibling temp file, then rename: readers never observe a
// partial artifact
void atomic_write_file(const std::filesystem::path& path, ByteSpan data);

} // namespace cryoinr
