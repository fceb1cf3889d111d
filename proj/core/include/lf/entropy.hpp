#pragma once

#include <cstdint>
#include <vector>

#include "lf/bitio.hpp"
#include "lf/quant.hpp"

namespace lf {

/// Baseline-JPEG style entropy coding of quantized blocks, one channel at a
/// time. DC is DPCM-coded across the whole block sequence (predictor 0 for
/// the first block); AC uses (run,size) symbols with ZRL for 16 zeros and an
/// EOB closing every block, including full ones.
void entropy_encode(const std::vector<std::vector<std::int32_t>>& blocks,
                    const std::vector<int>& scan_order, ChannelClass channel_class,
                    BitWriter& writer);

std::vector<std::vector<std::int32_t>> entropy_decode(BitReader& reader, std::size_t block_count,
                                                      const std::vector<int>& scan_order,
                                                      ChannelClass channel_class);

}  // namespace lf
