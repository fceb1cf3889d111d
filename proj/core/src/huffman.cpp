#include "lf/huffman.hpp"

namespace lf {

namespace {

// ITU T.81 Annex K: BITS (codes per length 1..16) and HUFFVAL arrays.
constexpr std::uint8_t kDcLumaBits[16] = {0, 1, 5, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0};
constexpr std::uint8_t kDcLumaValues[12] = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};

constexpr std::uint8_t kDcChromaBits[16] = {0, 3, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0};
constexpr std::uint8_t kDcChromaValues[12] = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};

constexpr std::uint8_t kAcLumaBits[16] = {0, 2, 1, 3, 3, 2, 4, 3, 5, 5, 4, 4, 0, 0, 1, 125};
constexpr std::uint8_t kAcLumaValues[162] = {
    0x01, 0x02, 0x03, 0x00, 0x04, 0x11, 0x05, 0x12, 0x21, 0x31, 0x41, 0x06, 0x13, 0x51, 0x61,
    0x07, 0x22, 0x71, 0x14, 0x32, 0x81, 0x91, 0xA1, 0x08, 0x23, 0x42, 0xB1, 0xC1, 0x15, 0x52,
    0xD1, 0xF0, 0x24, 0x33, 0x62, 0x72, 0x82, 0x09, 0x0A, 0x16, 0x17, 0x18, 0x19, 0x1A, 0x25,
    0x26, 0x27, 0x28, 0x29, 0x2A, 0x34, 0x35, 0x36, 0x37, 0x38, 0x39, 0x3A, 0x43, 0x44, 0x45,
    0x46, 0x47, 0x48, 0x49, 0x4A, 0x53, 0x54, 0x55, 0x56, 0x57, 0x58, 0x59, 0x5A, 0x63, 0x64,
    0x65, 0x66, 0x67, 0x68, 0x69, 0x6A, 0x73, 0x74, 0x75, 0x76, 0x77, 0x78, 0x79, 0x7A, 0x83,
    0x84, 0x85, 0x86, 0x87, 0x88, 0x89, 0x8A, 0x92, 0x93, 0x94, 0x95, 0x96, 0x97, 0x98, 0x99,
    0x9A, 0xA2, 0xA3, 0xA4, 0xA5, 0xA6, 0xA7, 0xA8, 0xA9, 0xAA, 0xB2, 0xB3, 0xB4, 0xB5, 0xB6,
    0xB7, 0xB8, 0xB9, 0xBA, 0xC2, 0xC3, 0xC4, 0xC5, 0xC6, 0xC7, 0xC8, 0xC9, 0xCA, 0xD2, 0xD3,
    0xD4, 0xD5, 0xD6, 0xD7, 0xD8, 0xD9, 0xDA, 0xE1, 0xE2, 0xE3, 0xE4, 0xE5, 0xE6, 0xE7, 0xE8,
    0xE9, 0xEA, 0xF1, 0xF2, 0xF3, 0xF4, 0xF5, 0xF6, 0xF7, 0xF8, 0xF9, 0xFA};

constexpr std::uint8_t kAcChromaBits[16] = {0, 2, 1, 2, 4, 4, 3, 4, 7, 5, 4, 4, 0, 1, 2, 119};
constexpr std::uint8_t kAcChromaValues[162] = {
    0x00, 0x01, 0x02, 0x03, 0x11, 0x04, 0x05, 0x21, 0x31, 0x06, 0x12, 0x41, 0x51, 0x07, 0x61,
    0x71, 0x13, 0x22, 0x32, 0x81, 0x08, 0x14, 0x42, 0x91, 0xA1, 0xB1, 0xC1, 0x09, 0x23, 0x33,
    0x52, 0xF0, 0x15, 0x62, 0x72, 0xD1, 0x0A, 0x16, 0x24, 0x34, 0xE1, 0x25, 0xF1, 0x17, 0x18,
    0x19, 0x1A, 0x26, 0x27, 0x28, 0x29, 0x2A, 0x35, 0x36, 0x37, 0x38, 0x39, 0x3A, 0x43, 0x44,
    0x45, 0x46, 0x47, 0x48, 0x49, 0x4A, 0x53, 0x54, 0x55, 0x56, 0x57, 0x58, 0x59, 0x5A, 0x63,
    0x64, 0x65, 0x66, 0x67, 0x68, 0x69, 0x6A, 0x73, 0x74, 0x75, 0x76, 0x77, 0x78, 0x79, 0x7A,
    0x82, 0x83, 0x84, 0x85, 0x86, 0x87, 0x88, 0x89, 0x8A, 0x92, 0x93, 0x94, 0x95, 0x96, 0x97,
    0x98, 0x99, 0x9A, 0xA2, 0xA3, 0xA4, 0xA5, 0xA6, 0xA7, 0xA8, 0xA9, 0xAA, 0xB2, 0xB3, 0xB4,
    0xB5, 0xB6, 0xB7, 0xB8, 0xB9, 0xBA, 0xC2, 0xC3, 0xC4, 0xC5, 0xC6, 0xC7, 0xC8, 0xC9, 0xCA,
    0xD2, 0xD3, 0xD4, 0xD5, 0xD6, 0xD7, 0xD8, 0xD9, 0xDA, 0xE2, 0xE3, 0xE4, 0xE5, 0xE6, 0xE7,
    0xE8, 0xE9, 0xEA, 0xF2, 0xF3, 0xF4, 0xF5, 0xF6, 0xF7, 0xF8, 0xF9, 0xFA};

// DC size categories 12 and 13, appended canonically (one per extra length).
constexpr std::uint8_t kDcExtension[2] = {12, 13};

}  // namespace

HuffTable::HuffTable(std::span<const std::uint8_t> bits, std::span<const std::uint8_t> values,
                     std::span<const std::uint8_t> extra) {
    // flatten (symbol, length) pairs in canonical order
    struct Entry {
        std::uint8_t symbol;
        int length;
    };
    std::vector<Entry> entries;
    std::size_t vi = 0;
    int last_length = 0;
    for (int len = 1; len <= static_cast<int>(bits.size()); ++len)
        for (int i = 0; i < bits[len - 1]; ++i) {
            entries.push_back({values[vi++], len});
            last_length = len;
        }
    for (std::size_t i = 0; i < extra.size(); ++i)
        entries.push_back({extra[i], last_length + static_cast<int>(i) + 1});

    // canonical code assignment
    std::uint32_t code = 0;
    int length = entries.front().length;
    for (auto& e : entries) {
        code <<= (e.length - length);
        length = e.length;
        encode_[e.symbol] = {static_cast<std::uint16_t>(code), static_cast<std::uint8_t>(length)};
        ++code;
    }
    max_length_ = length;

    // decoder tables (mincode/maxcode/valptr per length)
    min_code_.fill(0);
    max_code_.fill(-1);
    val_ptr_.fill(0);
    code = 0;
    std::size_t k = 0;
    for (int len = 1; len <= max_length_; ++len) {
        std::size_t first = k;
        while (k < entries.size() && entries[k].length == len) ++k;
        if (k > first) {
            val_ptr_[len] = static_cast<int>(first);
            min_code_[len] = static_cast<std::int32_t>(code + 0);
            code += static_cast<std::uint32_t>(k - first);
            max_code_[len] = static_cast<std::int32_t>(code - 1);
        }
        code <<= 1;
    }
    symbols_.reserve(entries.size());
    for (const auto& e : entries) symbols_.push_back(e.symbol);
}

void HuffTable::emit(BitWriter& w, std::uint8_t symbol) const {
    const HuffCode& hc = encode_[symbol];
    w.put(hc.code, hc.length);
}

std::uint8_t HuffTable::decode(BitReader& r) const {
    std::int32_t code = 0;
    for (int len = 1; len <= max_length_; ++len) {
        code = (code << 1) | static_cast<std::int32_t>(r.get_bit());
        if (max_code_[len] >= 0 && code <= max_code_[len] && code >= min_code_[len])
            return symbols_[static_cast<std::size_t>(val_ptr_[len] + (code - min_code_[len]))];
    }
    throw BitstreamError("invalid Huffman prefix", r.position());
}

const HuffTable& dc_table(ChannelClass cls) {
    static const HuffTable luma(kDcLumaBits, kDcLumaValues, kDcExtension);
    static const HuffTable chroma(kDcChromaBits, kDcChromaValues, kDcExtension);
    return cls == ChannelClass::Luma ? luma : chroma;
}

const HuffTable& ac_table(ChannelClass cls) {
    static const HuffTable luma(kAcLumaBits, kAcLumaValues);
    static const HuffTable chroma(kAcChromaBits, kAcChromaValues);
    return cls == ChannelClass::Luma ? luma : chroma;
}

int bit_category(std::int32_t v) {
    std::uint32_t a = v < 0 ? static_cast<std::uint32_t>(-static_cast<std::int64_t>(v))
                            : static_cast<std::uint32_t>(v);
    int n = 0;
    while (a != 0) {
        ++n;
        a >>= 1;
    }
    return n;
}

std::uint32_t extension_bits(std::int32_t v, int category) {
    if (v >= 0) return static_cast<std::uint32_t>(v);
    return static_cast<std::uint32_t>(v + (1 << category) - 1);
}

std::int32_t extend_value(std::uint32_t bits, int category) {
    if (category == 0) return 0;
    if (bits < (1u << (category - 1)))
        return static_cast<std::int32_t>(bits) - (1 << category) + 1;
    return static_cast<std::int32_t>(bits);
}

}  // namespace lf
