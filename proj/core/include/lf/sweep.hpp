#pragma once

#include <string>
#include <vector>

#include "lf/light_field.hpp"

namespace lf {

struct SweepConfig {
    std::vector<int> modes;      // dimensionalities, subset of {2,3,4}
    std::vector<int> qualities;  // 1..100
    int alpha_count = 5;
};

struct RDPoint {
    std::string mode;
    int quality = 0;
    double bpp = 0.0;
    double psnr_mean = 0.0;
    double psnr_direct = 0.0;  // only filled by experiment0
};

/// Encode/decode at every (mode, quality), mean focal PSNR over a linear
/// alpha sweep across the field's disparity range. Rows sorted by
/// (mode, quality).
std::vector<RDPoint> rd_sweep(const LightField& lf, const SweepConfig& cfg);
std::string rd_sweep_csv(const LightField& lf, const SweepConfig& cfg);

/// jpeg4d per quality: bpp, direct PSNR, and mean rendered PSNR.
std::vector<RDPoint> experiment0(const LightField& lf, const std::vector<int>& qualities,
                                 int alpha_count = 5);
std::string experiment0_csv(const LightField& lf, const std::vector<int>& qualities,
                            int alpha_count = 5);

/// CSV numeric formatting: 6 significant digits, '.' decimal, "inf" for the
/// infinity sentinel.
std::string format_csv_number(double v);

}  // namespace lf
