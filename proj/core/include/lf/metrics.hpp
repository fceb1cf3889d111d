#pragma once

#include <limits>
#include <vector>

#include "lf/light_field.hpp"
#include "lf/refocus.hpp"

namespace lf {

/// Returned when the MSE is exactly zero.
inline constexpr double kInfinitePsnr = std::numeric_limits<double>::infinity();

/// PSNR = 10*log10(255^2 / MSE), MSE pooled over all pixels of all three
/// channels.
double psnr(const View& a, const View& b);

/// Real-valued renders are rounded to 8 bits first (half away from zero).
double psnr(const RenderedView& a, const RenderedView& b);

/// MSE pooled over every view and channel of the whole 4D array.
double direct_psnr(const LightField& original, const LightField& decoded);

struct FocalPsnr {
    double mean = 0.0;
    std::vector<double> per_alpha;
};

/// Render both fields at each alpha, PSNR per alpha on the 8-bit-rounded
/// renders, arithmetic mean. Any infinite entry makes the mean infinite.
FocalPsnr mean_focal_psnr(const LightField& original, const LightField& decoded,
                          const std::vector<double>& alphas);

}  // namespace lf
