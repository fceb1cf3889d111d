#include "lf/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "lf/codec.hpp"
#include "lf/error.hpp"
#include "lf/metrics.hpp"
#include "lf/refocus.hpp"

namespace lf {

std::string format_csv_number(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::vector<RDPoint> rd_sweep(const LightField& lf, const SweepConfig& cfg) {
    if (cfg.modes.empty() || cfg.qualities.empty())
        throw ParamError("sweep: modes and qualities must be non-empty");
    if (cfg.alpha_count < 1)
        throw ParamError("sweep: alpha_count must be >= 1");
    for (int mode : cfg.modes)
        if (mode < 2 || mode > 4)
            throw ParamError("sweep: mode must be 2, 3, or 4, got " + std::to_string(mode));
    for (int q : cfg.qualities)
        if (q < 1 || q > 100)
            throw ParamError("sweep: quality must be in 1..100, got " + std::to_string(q));

    std::vector<int> modes = cfg.modes;
    std::vector<int> qualities = cfg.qualities;
    std::sort(modes.begin(), modes.end());
    std::sort(qualities.begin(), qualities.end());

    const auto alphas = make_alpha_sweep(lf.disparity_min, lf.disparity_max, cfg.alpha_count);

    std::vector<RDPoint> points;
    for (int mode : modes) {
        for (int q : qualities) {
            try {
                EncodedStream stream = encode(lf, CodecConfig{mode, q});
                LightField decoded = decode(stream);
                RDPoint p;
                p.mode = mode_name(mode);
                p.quality = q;
                p.bpp = bits_per_pixel(stream.byte_size(), lf.grid_rows, lf.grid_cols, lf.width(),
                                       lf.height());
                p.psnr_mean = mean_focal_psnr(lf, decoded, alphas).mean;
                points.push_back(std::move(p));
            } catch (const Error& e) {
                throw Error(std::string(e.what()) + " (mode " + mode_name(mode) + ", quality " +
                            std::to_string(q) + ")");
            }
        }
    }
    return points;
}

std::string rd_sweep_csv(const LightField& lf, const SweepConfig& cfg) {
    std::string csv = "mode,quality,bpp,psnr_mean\n";
    for (const RDPoint& p : rd_sweep(lf, cfg))
        csv += p.mode + "," + std::to_string(p.quality) + "," + format_csv_number(p.bpp) + "," +
               format_csv_number(p.psnr_mean) + "\n";
    return csv;
}

std::vector<RDPoint> experiment0(const LightField& lf, const std::vector<int>& qualities,
                                 int alpha_count) {
    if (qualities.empty())
        throw ParamError("experiment0: qualities must be non-empty");
    if (alpha_count < 1)
        throw ParamError("experiment0: alpha_count must be >= 1");
    for (int q : qualities)
        if (q < 1 || q > 100)
            throw ParamError("experiment0: quality must be in 1..100, got " + std::to_string(q));

    std::vector<int> sorted = qualities;
    std::sort(sorted.begin(), sorted.end());
    const auto alphas = make_alpha_sweep(lf.disparity_min, lf.disparity_max, alpha_count);

    std::vector<RDPoint> points;
    for (int q : sorted) {
        try {
            EncodedStream stream = encode(lf, CodecConfig{4, q});
            LightField decoded = decode(stream);
            RDPoint p;
            p.mode = mode_name(4);
            p.quality = q;
            p.bpp = bits_per_pixel(stream.byte_size(), lf.grid_rows, lf.grid_cols, lf.width(),
                                   lf.height());
            p.psnr_direct = direct_psnr(lf, decoded);
            p.psnr_mean = mean_focal_psnr(lf, decoded, alphas).mean;
            points.push_back(std::move(p));
        } catch (const Error& e) {
            throw Error(std::string(e.what()) + " (mode jpeg4d, quality " + std::to_string(q) + ")");
        }
    }
    return points;
}

std::string experiment0_csv(const LightField& lf, const std::vector<int>& qualities,
                            int alpha_count) {
    std::string csv = "quality,bpp,psnr_direct,psnr_rendered_mean\n";
    for (const RDPoint& p : experiment0(lf, qualities, alpha_count))
        csv += std::to_string(p.quality) + "," + format_csv_number(p.bpp) + "," +
               format_csv_number(p.psnr_direct) + "," + format_csv_number(p.psnr_mean) + "\n";
    return csv;
}

}  // namespace lf
