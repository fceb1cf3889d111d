#include "lf/quant.hpp"

#include <array>
#include <cmath>

#include "lf/dct.hpp"
#include "lf/error.hpp"

namespace lf {

namespace {

// ITU T.81 Annex K, Table K.1 (luminance), row-major over (u,v).
constexpr std::array<int, 64> kBaseLuma = {
    16, 11, 10, 16, 24, 40, 51, 61,
    12, 12, 14, 19, 26, 58, 60, 55,
    14, 13, 16, 24, 40, 57, 69, 56,
    14, 17, 22, 29, 51, 87, 80, 62,
    18, 22, 37, 56, 68, 109, 103, 77,
    24, 35, 55, 64, 81, 104, 113, 92,
    49, 64, 78, 87, 103, 121, 120, 101,
    72, 92, 95, 98, 112, 100, 103, 99,
};

// Table K.2 (chrominance).
constexpr std::array<int, 64> kBaseChroma = {
    17, 18, 24, 47, 99, 99, 99, 99,
    18, 21, 26, 66, 99, 99, 99, 99,
    24, 26, 56, 99, 99, 99, 99, 99,
    47, 66, 99, 99, 99, 99, 99, 99,
    99, 99, 99, 99, 99, 99, 99, 99,
    99, 99, 99, 99, 99, 99, 99, 99,
    99, 99, 99, 99, 99, 99, 99, 99,
    99, 99, 99, 99, 99, 99, 99, 99,
};

// g(r): rounded mean of the Annex K entries on diagonal u+v == r.
std::array<int, 15> diagonal_means(const std::array<int, 64>& base) {
    std::array<int, 15> g{};
    for (int r = 0; r <= 14; ++r) {
        int sum = 0, count = 0;
        for (int u = 0; u < 8; ++u)
            for (int v = 0; v < 8; ++v)
                if (u + v == r) {
                    sum += base[u * 8 + v];
                    ++count;
                }
        g[r] = static_cast<int>(std::lround(static_cast<double>(sum) / count));
    }
    return g;
}

int scale_entry(int entry, int scale) {
    int scaled = (entry * scale + 50) / 100;
    return scaled < 1 ? 1 : (scaled > 255 ? 255 : scaled);
}

}  // namespace

QuantTable build_quant_table(int d, int quality, ChannelClass channel_class) {
    if (d < 2 || d > 4)
        throw ParamError("quant: dimensionality must be 2, 3, or 4");
    if (quality < 1 || quality > 100)
        throw ParamError("quant: quality must be in 1..100");

    const auto& base = channel_class == ChannelClass::Luma ? kBaseLuma : kBaseChroma;
    const int scale = quality < 50 ? 5000 / quality : 200 - 2 * quality;

    QuantTable table;
    table.dimensionality = d;
    table.channel_class = channel_class;
    table.entries.resize(block_size(d));

    if (d == 2) {
        for (std::size_t i = 0; i < 64; ++i) table.entries[i] = scale_entry(base[i], scale);
        return table;
    }

    const auto g = diagonal_means(base);
    std::vector<int> idx(static_cast<std::size_t>(d), 0);
    for (std::size_t i = 0; i < table.entries.size(); ++i) {
        int sum = 0;
        for (int v : idx) sum += v;
        table.entries[i] = scale_entry(g[sum < 14 ? sum : 14], scale);
        for (int a = d - 1; a >= 0; --a) {
            if (++idx[a] < kBlockEdge) break;
            idx[a] = 0;
        }
    }
    return table;
}

void quantize(std::span<const double> coeffs, const QuantTable& table, std::span<std::int32_t> out) {
    if (coeffs.size() != table.entries.size() || out.size() != table.entries.size())
        throw ShapeError("quantize: length mismatch");
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        auto q = static_cast<std::int32_t>(std::round(coeffs[i] / table.entries[i]));
        std::int32_t lo = i == 0 ? kDcClampMin : kAcClampMin;
        std::int32_t hi = i == 0 ? kDcClampMax : kAcClampMax;
        out[i] = q < lo ? lo : (q > hi ? hi : q);
    }
}

void dequantize(std::span<const std::int32_t> quantized, const QuantTable& table,
                std::span<double> out) {
    if (quantized.size() != table.entries.size() || out.size() != table.entries.size())
        throw ShapeError("dequantize: length mismatch");
    for (std::size_t i = 0; i < quantized.size(); ++i)
        out[i] = static_cast<double>(quantized[i]) * table.entries[i];
}

}  // namespace lf
