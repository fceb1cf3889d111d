#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "lf/bitio.hpp"
#include "lf/quant.hpp"

namespace lf {

struct HuffCode {
    std::uint16_t code = 0;
    std::uint8_t length = 0;  // 0 = symbol not in table
};

/// A canonical Huffman table in both directions.
class HuffTable {
public:
    /// bits[i] = number of codes of length i+1; values in code order.
    /// extra = symbols appended canonically after the Annex K set, one per
    /// increasing code length (used for the DC category 12/13 extension).
    HuffTable(std::span<const std::uint8_t> bits, std::span<const std::uint8_t> values,
              std::span<const std::uint8_t> extra = {});

    const HuffCode& code(std::uint8_t symbol) const { return encode_[symbol]; }
    void emit(BitWriter& w, std::uint8_t symbol) const;
    std::uint8_t decode(BitReader& r) const;

private:
    std::array<HuffCode, 256> encode_{};
    // canonical decode: per code length, first code and index into symbols_.
    std::array<std::int32_t, 18> min_code_{};
    std::array<std::int32_t, 18> max_code_{};  // -1 = no codes of this length
    std::array<int, 18> val_ptr_{};
    std::vector<std::uint8_t> symbols_;
    int max_length_ = 0;
};

/// Annex K tables K.3-K.6; DC tables carry two extra canonical codes for
/// size categories 12 and 13 (DPCM differences of clamped DC values reach
/// +-8191). See docs/bitstream.md.
const HuffTable& dc_table(ChannelClass cls);
const HuffTable& ac_table(ChannelClass cls);

/// Size category: bit length of |v| (0 for v == 0).
int bit_category(std::int32_t v);

/// JPEG sign-magnitude extension bits for a nonzero value of given category.
std::uint32_t extension_bits(std::int32_t v, int category);

/// Inverse of extension_bits.
std::int32_t extend_value(std::uint32_t bits, int category);

}  // namespace lf
