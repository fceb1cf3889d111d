#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace lf {

enum class ChannelClass { Luma, Chroma };

inline constexpr std::int32_t kAcClampMin = -1023;
inline constexpr std::int32_t kAcClampMax = 1023;
inline constexpr std::int32_t kDcClampMin = -4096;
inline constexpr std::int32_t kDcClampMax = 4095;

struct QuantTable {
    int dimensionality = 2;
    ChannelClass channel_class = ChannelClass::Luma;
    std::vector<int> entries;  // 8^d values in [1, 255]
};

/// d=2: ITU T.81 Annex K base table (K.1 luma / K.2 chroma).
/// d>=3: entry at (u_1..u_d) is g(min(sum u_i, 14)) where g(r) is the rounded
/// mean of the Annex K entries on diagonal u+v == r.
/// Quality scaling: s = quality < 50 ? 5000/quality : 200 - 2*quality;
/// entry' = clamp(floor((entry*s + 50)/100), 1, 255).
QuantTable build_quant_table(int d, int quality, ChannelClass channel_class);

/// q_i = round_half_away_from_zero(c_i / t_i), AC clamped to [-1023,1023],
/// DC (index 0) to [-4096,4095].
void quantize(std::span<const double> coeffs, const QuantTable& table, std::span<std::int32_t> out);

/// c_i = q_i * t_i.
void dequantize(std::span<const std::int32_t> quantized, const QuantTable& table, std::span<double> out);

}  // namespace lf
