#include "lf/codec.hpp"

#include <cstring>
#include <string>

#include "lf/bitio.hpp"
#include "lf/blocks.hpp"
#include "lf/color.hpp"
#include "lf/dct.hpp"
#include "lf/entropy.hpp"
#include "lf/error.hpp"
#include "lf/quant.hpp"
#include "lf/zigzag.hpp"

namespace lf {

namespace {

constexpr char kMagic[4] = {'L', 'F', 'J', '1'};
constexpr std::size_t kHeaderSize = 4 + 6 + 4 * 2;

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v & 0xFF));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 24));
    out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xFF));
    out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
    out.push_back(static_cast<std::uint8_t>(v & 0xFF));
}

std::uint16_t get_u16(std::span<const std::uint8_t> b, std::size_t off) {
    return static_cast<std::uint16_t>((b[off] << 8) | b[off + 1]);
}

std::uint32_t get_u32(std::span<const std::uint8_t> b, std::size_t off) {
    return (static_cast<std::uint32_t>(b[off]) << 24) | (static_cast<std::uint32_t>(b[off + 1]) << 16) |
           (static_cast<std::uint32_t>(b[off + 2]) << 8) | b[off + 3];
}

// Per-mode list of d-dimensional arrays to code. d=2 slices one array per
// view; d=3 and d=4 reinterpret the whole planar layout in place.
struct Layout {
    std::vector<int> dims;
    std::size_t array_count;   // arrays per channel
    std::size_t array_length;  // samples per array
};

Layout make_layout(int d, int K, int L, int M, int N) {
    Layout layout;
    if (d == 2) {
        layout.dims = {M, N};
        layout.array_count = static_cast<std::size_t>(K) * L;
    } else if (d == 3) {
        layout.dims = {K * L, M, N};
        layout.array_count = 1;
    } else {
        layout.dims = {K, L, M, N};
        layout.array_count = 1;
    }
    layout.array_length = 1;
    for (int v : layout.dims) layout.array_length *= static_cast<std::size_t>(v);
    return layout;
}

}  // namespace

std::vector<std::uint8_t> EncodedStream::serialize() const {
    std::vector<std::uint8_t> out;
    out.reserve(byte_size());
    out.insert(out.end(), kMagic, kMagic + 4);
    out.push_back(header.version);
    out.push_back(header.dimensionality);
    out.push_back(header.quality);
    out.push_back(header.block_edge);
    out.push_back(header.chroma);
    out.push_back(0);  // reserved
    put_u16(out, header.grid_rows);
    put_u16(out, header.grid_cols);
    put_u16(out, header.width);
    put_u16(out, header.height);
    for (int c = 0; c < 3; ++c) {
        put_u32(out, static_cast<std::uint32_t>(payload_bits[c]));
        out.insert(out.end(), payloads[c].begin(), payloads[c].end());
    }
    return out;
}

std::size_t EncodedStream::byte_size() const {
    std::size_t n = kHeaderSize;
    for (int c = 0; c < 3; ++c) n += 4 + payloads[c].size();
    return n;
}

EncodedStream parse_stream(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kHeaderSize)
        throw BitstreamError("stream shorter than header", 0);
    if (std::memcmp(bytes.data(), kMagic, 4) != 0)
        throw BitstreamError("bad magic, expected LFJ1", 0);

    EncodedStream s;
    s.header.version = bytes[4];
    s.header.dimensionality = bytes[5];
    s.header.quality = bytes[6];
    s.header.block_edge = bytes[7];
    s.header.chroma = bytes[8];
    s.header.grid_rows = get_u16(bytes, 10);
    s.header.grid_cols = get_u16(bytes, 12);
    s.header.width = get_u16(bytes, 14);
    s.header.height = get_u16(bytes, 16);

    if (s.header.version != 1)
        throw BitstreamError("unsupported version " + std::to_string(s.header.version), 32);
    if (s.header.dimensionality < 2 || s.header.dimensionality > 4)
        throw BitstreamError("bad dimensionality " + std::to_string(s.header.dimensionality), 40);
    if (s.header.quality < 1 || s.header.quality > 100)
        throw BitstreamError("bad quality " + std::to_string(s.header.quality), 48);
    if (s.header.block_edge != 8)
        throw BitstreamError("unsupported block edge", 56);
    if (s.header.chroma != 0)
        throw BitstreamError("unsupported chroma mode", 64);
    if (s.header.grid_rows == 0 || s.header.grid_cols == 0 || s.header.width == 0 ||
        s.header.height == 0)
        throw BitstreamError("zero dimension in header", 80);

    std::size_t off = kHeaderSize;
    for (int c = 0; c < 3; ++c) {
        if (bytes.size() < off + 4)
            throw BitstreamError("truncated payload length", off * 8);
        s.payload_bits[c] = get_u32(bytes, off);
        off += 4;
        std::size_t nbytes = (s.payload_bits[c] + 7) / 8;
        if (bytes.size() < off + nbytes)
            throw BitstreamError("truncated channel payload", off * 8);
        s.payloads[c].assign(bytes.begin() + static_cast<std::ptrdiff_t>(off),
                             bytes.begin() + static_cast<std::ptrdiff_t>(off + nbytes));
        off += nbytes;
    }
    if (off != bytes.size())
        throw BitstreamError("trailing bytes after payloads", off * 8);
    return s;
}

EncodedStream encode(const LightField& lf, const CodecConfig& cfg) {
    if (cfg.dimensionality < 2 || cfg.dimensionality > 4)
        throw ParamError("codec: dimensionality must be 2, 3, or 4");
    if (cfg.quality < 1 || cfg.quality > 100)
        throw ParamError("codec: quality must be in 1..100");
    if (lf.views.empty())
        throw ParamError("codec: empty light field");

    const int d = cfg.dimensionality;
    const int K = lf.grid_rows, L = lf.grid_cols;
    const int M = lf.width(), N = lf.height();

    PlanarField pf = to_planar(lf);
    color_transform(pf, ColorDirection::Forward);
    for (auto& plane : pf.channels)
        for (double& v : plane) v -= 128.0;

    const Layout layout = make_layout(d, K, L, M, N);
    const std::vector<int> scan = zigzag_order(d);

    EncodedStream stream;
    stream.header.version = 1;
    stream.header.dimensionality = static_cast<std::uint8_t>(d);
    stream.header.quality = static_cast<std::uint8_t>(cfg.quality);
    stream.header.grid_rows = static_cast<std::uint16_t>(K);
    stream.header.grid_cols = static_cast<std::uint16_t>(L);
    stream.header.width = static_cast<std::uint16_t>(M);
    stream.header.height = static_cast<std::uint16_t>(N);

    for (int c = 0; c < 3; ++c) {
        const QuantTable table =
            build_quant_table(d, cfg.quality, c == 0 ? ChannelClass::Luma : ChannelClass::Chroma);
        std::vector<std::vector<std::int32_t>> coded;
        for (std::size_t a = 0; a < layout.array_count; ++a) {
            std::span<const double> src(pf.channels[c].data() + a * layout.array_length,
                                        layout.array_length);
            auto blocks = pad_and_partition(src, layout.dims);
            for (auto& block : blocks) {
                dct_forward(block, d);
                std::vector<std::int32_t> q(block.size());
                quantize(block, table, q);
                coded.push_back(std::move(q));
            }
        }
        BitWriter writer;
        entropy_encode(coded, scan, c == 0 ? ChannelClass::Luma : ChannelClass::Chroma, writer);
        stream.payload_bits[c] = writer.bit_count();
        stream.payloads[c] = writer.finish();
    }
    return stream;
}

LightField decode(const EncodedStream& stream) {
    const int d = stream.header.dimensionality;
    const int K = stream.header.grid_rows, L = stream.header.grid_cols;
    const int M = stream.header.width, N = stream.header.height;

    const Layout layout = make_layout(d, K, L, M, N);
    const BlockGrid grid = make_block_grid(layout.dims);
    const std::size_t blocks_per_array = grid.block_count();
    const std::vector<int> scan = zigzag_order(d);

    PlanarField pf;
    pf.grid_rows = K;
    pf.grid_cols = L;
    pf.width = M;
    pf.height = N;
    for (auto& plane : pf.channels) plane.resize(pf.plane_size());

    for (int c = 0; c < 3; ++c) {
        const ChannelClass cls = c == 0 ? ChannelClass::Luma : ChannelClass::Chroma;
        const QuantTable table = build_quant_table(d, stream.header.quality, cls);
        BitReader reader(stream.payloads[c], stream.payload_bits[c]);
        auto coded = entropy_decode(reader, layout.array_count * blocks_per_array, scan, cls);

        for (std::size_t a = 0; a < layout.array_count; ++a) {
            std::vector<std::vector<double>> blocks(blocks_per_array);
            for (std::size_t b = 0; b < blocks_per_array; ++b) {
                const auto& q = coded[a * blocks_per_array + b];
                blocks[b].resize(q.size());
                dequantize(q, table, blocks[b]);
                dct_inverse(blocks[b], d);
            }
            std::vector<double> array = reassemble(blocks, layout.dims);
            std::copy(array.begin(), array.end(),
                      pf.channels[c].begin() + static_cast<std::ptrdiff_t>(a * layout.array_length));
        }
    }

    for (auto& plane : pf.channels)
        for (double& v : plane) v += 128.0;
    color_transform(pf, ColorDirection::Inverse);
    return from_planar(pf);
}

LightField decode(std::span<const std::uint8_t> bytes) {
    return decode(parse_stream(bytes));
}

double bits_per_pixel(std::size_t stream_bytes, int grid_rows, int grid_cols, int width,
                      int height) {
    if (grid_rows < 1 || grid_cols < 1 || width < 1 || height < 1)
        throw ParamError("bits_per_pixel: dimensions must be positive");
    double pixels = static_cast<double>(grid_rows) * grid_cols * width * height;
    return static_cast<double>(stream_bytes) * 8.0 / pixels;
}

const char* mode_name(int dimensionality) {
    switch (dimensionality) {
        case 2: return "jpeg2d";
        case 3: return "jpeg3d";
        case 4: return "jpeg4d";
        default: throw ParamError("mode_name: dimensionality must be 2, 3, or 4");
    }
}

int mode_dimensionality(const std::string& s) {
    if (s == "2d" || s == "jpeg2d") return 2;
    if (s == "3d" || s == "jpeg3d") return 3;
    if (s == "4d" || s == "jpeg4d") return 4;
    throw ParamError("unknown mode '" + s + "' (expected 2d, 3d, or 4d)");
}

}  // namespace lf
