#include "lf/entropy.hpp"

#include <string>

#include "lf/error.hpp"
#include "lf/huffman.hpp"

namespace lf {

namespace {

constexpr std::uint8_t kEob = 0x00;
constexpr std::uint8_t kZrl = 0xF0;
constexpr int kMaxAcCategory = 10;
constexpr int kMaxDcCategory = 13;

}  // namespace

void entropy_encode(const std::vector<std::vector<std::int32_t>>& blocks,
                    const std::vector<int>& scan_order, ChannelClass channel_class,
                    BitWriter& writer) {
    const HuffTable& dc = dc_table(channel_class);
    const HuffTable& ac = ac_table(channel_class);
    const std::size_t n = scan_order.size();

    std::int32_t pred = 0;
    for (const auto& block : blocks) {
        if (block.size() != n)
            throw ShapeError("entropy: block length " + std::to_string(block.size()) +
                             " != scan order length " + std::to_string(n));
        // DC: DPCM difference in size-category + extension-bit form
        std::int32_t dc_value = block[scan_order[0]];
        std::int32_t diff = dc_value - pred;
        pred = dc_value;
        int cat = bit_category(diff);
        if (cat > kMaxDcCategory)
            throw ParamError("entropy: DC difference " + std::to_string(diff) +
                             " outside codable range");
        dc.emit(writer, static_cast<std::uint8_t>(cat));
        if (cat > 0) writer.put(extension_bits(diff, cat), cat);

        // AC: (run,size) pairs; EOB closes every block
        int run = 0;
        for (std::size_t pos = 1; pos < n; ++pos) {
            std::int32_t v = block[scan_order[pos]];
            if (v == 0) {
                ++run;
                continue;
            }
            while (run >= 16) {
                ac.emit(writer, kZrl);
                run -= 16;
            }
            int size = bit_category(v);
            if (size > kMaxAcCategory)
                throw ParamError("entropy: AC coefficient " + std::to_string(v) +
                                 " outside codable range");
            ac.emit(writer, static_cast<std::uint8_t>((run << 4) | size));
            writer.put(extension_bits(v, size), size);
            run = 0;
        }
        ac.emit(writer, kEob);
    }
}

std::vector<std::vector<std::int32_t>> entropy_decode(BitReader& reader, std::size_t block_count,
                                                      const std::vector<int>& scan_order,
                                                      ChannelClass channel_class) {
    const HuffTable& dc = dc_table(channel_class);
    const HuffTable& ac = ac_table(channel_class);
    const std::size_t n = scan_order.size();

    std::vector<std::vector<std::int32_t>> blocks;
    blocks.reserve(block_count);
    std::int32_t pred = 0;
    for (std::size_t b = 0; b < block_count; ++b) {
        std::vector<std::int32_t> block(n, 0);

        int cat = dc.decode(reader);
        if (cat > kMaxDcCategory)
            throw BitstreamError("invalid DC size category " + std::to_string(cat),
                                 reader.position());
        std::int32_t diff = cat == 0 ? 0 : extend_value(reader.get(cat), cat);
        pred += diff;
        block[scan_order[0]] = pred;

        std::size_t pos = 1;
        for (;;) {
            std::uint8_t symbol = ac.decode(reader);
            if (symbol == kEob) break;
            if (symbol == kZrl) {
                pos += 16;
                if (pos > n)
                    throw BitstreamError("ZRL run past block end", reader.position());
                continue;
            }
            int run = symbol >> 4;
            int size = symbol & 0x0F;
            pos += static_cast<std::size_t>(run);
            if (pos >= n)
                throw BitstreamError("coefficient run past block end", reader.position());
            block[scan_order[pos]] = extend_value(reader.get(size), size);
            ++pos;
        }
        blocks.push_back(std::move(block));
    }
    return blocks;
}

}  // namespace lf
