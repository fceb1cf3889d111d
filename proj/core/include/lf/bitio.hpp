#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lf/error.hpp"

namespace lf {

/// MSB-first bit writer.
class BitWriter {
public:
    void put(std::uint32_t bits, int count) {
        for (int i = count - 1; i >= 0; --i) put_bit((bits >> i) & 1u);
    }
    void put_bit(std::uint32_t bit) {
        if (fill_ == 0) bytes_.push_back(0);
        bytes_.back() = static_cast<std::uint8_t>(bytes_.back() | ((bit & 1u) << (7 - fill_)));
        fill_ = (fill_ + 1) & 7;
        ++bit_count_;
    }
    std::uint64_t bit_count() const { return bit_count_; }

    /// Pad the final partial byte with 1-bits and return the buffer.
    std::vector<std::uint8_t> finish() {
        if (fill_ != 0) bytes_.back() = static_cast<std::uint8_t>(bytes_.back() | (0xFFu >> fill_));
        fill_ = 0;
        return std::move(bytes_);
    }

private:
    std::vector<std::uint8_t> bytes_;
    int fill_ = 0;  // bits used in the last byte
    std::uint64_t bit_count_ = 0;
};

/// MSB-first bit reader over a fixed bit length; throws BitstreamError past
/// the end.
class BitReader {
public:
    BitReader(std::span<const std::uint8_t> bytes, std::uint64_t bit_length)
        : bytes_(bytes), bit_length_(bit_length) {}

    std::uint32_t get_bit() {
        if (pos_ >= bit_length_) throw BitstreamError("read past end of payload", pos_);
        std::uint32_t bit = (bytes_[pos_ >> 3] >> (7 - (pos_ & 7))) & 1u;
        ++pos_;
        return bit;
    }
    std::uint32_t get(int count) {
        std::uint32_t v = 0;
        for (int i = 0; i < count; ++i) v = (v << 1) | get_bit();
        return v;
    }
    std::uint64_t position() const { return pos_; }
    bool at_end() const { return pos_ >= bit_length_; }

private:
    std::span<const std::uint8_t> bytes_;
    std::uint64_t bit_length_;
    std::uint64_t pos_ = 0;
};

}  // namespace lf
