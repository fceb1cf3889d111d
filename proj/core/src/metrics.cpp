#include "lf/metrics.hpp"

#include <cmath>

#include "lf/error.hpp"

namespace lf {

namespace {

double psnr_from_sums(double squared_error, double count) {
    if (squared_error == 0.0) return kInfinitePsnr;
    double mse = squared_error / count;
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

double squared_error(const View& a, const View& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        double d = static_cast<double>(a.samples[i]) - b.samples[i];
        acc += d * d;
    }
    return acc;
}

}  // namespace

double psnr(const View& a, const View& b) {
    if (a.width != b.width || a.height != b.height)
        throw ShapeError("psnr: image dimensions differ");
    return psnr_from_sums(squared_error(a, b), static_cast<double>(a.samples.size()));
}

double psnr(const RenderedView& a, const RenderedView& b) {
    if (a.width != b.width || a.height != b.height)
        throw ShapeError("psnr: image dimensions differ");
    return psnr(rendered_to_view(a), rendered_to_view(b));
}

double direct_psnr(const LightField& original, const LightField& decoded) {
    if (original.grid_rows != decoded.grid_rows || original.grid_cols != decoded.grid_cols ||
        original.width() != decoded.width() || original.height() != decoded.height())
        throw ShapeError("direct_psnr: light field geometry differs");
    double acc = 0.0;
    double count = 0.0;
    for (std::size_t v = 0; v < original.views.size(); ++v) {
        acc += squared_error(original.views[v], decoded.views[v]);
        count += static_cast<double>(original.views[v].samples.size());
    }
    return psnr_from_sums(acc, count);
}

FocalPsnr mean_focal_psnr(const LightField& original, const LightField& decoded,
                          const std::vector<double>& alphas) {
    if (original.grid_rows != decoded.grid_rows || original.grid_cols != decoded.grid_cols ||
        original.width() != decoded.width() || original.height() != decoded.height())
        throw ShapeError("mean_focal_psnr: light field geometry differs");
    if (alphas.empty())
        throw ParamError("mean_focal_psnr: alphas must be non-empty");

    PlanarField pa = to_planar(original);
    PlanarField pb = to_planar(decoded);

    FocalPsnr result;
    result.per_alpha.reserve(alphas.size());
    double sum = 0.0;
    bool infinite = false;
    for (double a : alphas) {
        double p = psnr(render_refocused(pa, RefocusParams{a}), render_refocused(pb, RefocusParams{a}));
        result.per_alpha.push_back(p);
        if (std::isinf(p))
            infinite = true;
        else
            sum += p;
    }
    result.mean = infinite ? kInfinitePsnr : sum / static_cast<double>(alphas.size());
    return result;
}

}  // namespace lf
