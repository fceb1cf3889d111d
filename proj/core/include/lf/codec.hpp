#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lf/light_field.hpp"

namespace lf {

/// JPEG-style codec generalized to d dimensions.
/// d=2: each view's (m,n) plane coded independently, views in row-major grid
///      order. d=3: one (K*L, M, N) volume with views stacked in row-major
///      grid order. d=4: the native (K,L,M,N) array.
struct CodecConfig {
    int dimensionality = 4;  // 2, 3, or 4
    int quality = 50;        // 1..100
};

/// Parsed LFJ1 container header (see docs/bitstream.md).
struct StreamHeader {
    std::uint8_t version = 1;
    std::uint8_t dimensionality = 0;
    std::uint8_t quality = 0;
    std::uint8_t block_edge = 8;
    std::uint8_t chroma = 0;  // 0 = 4:4:4
    std::uint16_t grid_rows = 0;
    std::uint16_t grid_cols = 0;
    std::uint16_t width = 0;
    std::uint16_t height = 0;
};

struct EncodedStream {
    StreamHeader header;
    std::array<std::uint64_t, 3> payload_bits{};  // Y, Cb, Cr
    std::array<std::vector<std::uint8_t>, 3> payloads;

    std::vector<std::uint8_t> serialize() const;
    std::size_t byte_size() const;
};

EncodedStream parse_stream(std::span<const std::uint8_t> bytes);

EncodedStream encode(const LightField& lf, const CodecConfig& cfg);
LightField decode(const EncodedStream& stream);
LightField decode(std::span<const std::uint8_t> bytes);

/// Container size in bits (header included) / (K*L*M*N).
double bits_per_pixel(std::size_t stream_bytes, int grid_rows, int grid_cols, int width, int height);

const char* mode_name(int dimensionality);      // "jpeg2d" / "jpeg3d" / "jpeg4d"
int mode_dimensionality(const std::string& s);  // "2d"/"jpeg2d" -> 2, ...

}  // namespace lf
