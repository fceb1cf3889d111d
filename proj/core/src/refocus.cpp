#include "lf/refocus.hpp"

#include <cmath>

#include "lf/error.hpp"

namespace lf {

namespace {

inline double clampd(double v, double lo, double hi) {
    return v < lo ? lo : (v > hi ? hi : v);
}

// Bilinear sample of view (k,l) at real coordinates (x,y), clamp-to-edge.
inline double sample_bilinear(const PlanarField& pf, int c, int k, int l, double x, double y) {
    x = clampd(x, 0.0, pf.width - 1.0);
    y = clampd(y, 0.0, pf.height - 1.0);
    int x0 = static_cast<int>(x);
    int y0 = static_cast<int>(y);
    int x1 = x0 + 1 < pf.width ? x0 + 1 : x0;
    int y1 = y0 + 1 < pf.height ? y0 + 1 : y0;
    double fx = x - x0;
    double fy = y - y0;
    const std::vector<double>& plane = pf.channels[c];
    double v00 = plane[pf.index(k, l, x0, y0)];
    double v10 = plane[pf.index(k, l, x1, y0)];
    double v01 = plane[pf.index(k, l, x0, y1)];
    double v11 = plane[pf.index(k, l, x1, y1)];
    return (1.0 - fy) * ((1.0 - fx) * v00 + fx * v10) + fy * ((1.0 - fx) * v01 + fx * v11);
}

}  // namespace

RenderedView render_refocused(const PlanarField& pf, const RefocusParams& params) {
    if (!std::isfinite(params.alpha))
        throw ParamError("refocus: alpha must be finite");

    const int K = pf.grid_rows, L = pf.grid_cols, M = pf.width, N = pf.height;
    RenderedView rv;
    rv.width = M;
    rv.height = N;
    rv.alpha = params.alpha;
    for (auto& plane : rv.channels) plane.assign(static_cast<std::size_t>(M) * N, 0.0);

    const double kc = (K - 1) / 2.0;
    const double lc = (L - 1) / 2.0;
    const double inv_n = 1.0 / (static_cast<double>(K) * L);

    for (int c = 0; c < 3; ++c) {
        for (int n = 0; n < N; ++n) {
            for (int m = 0; m < M; ++m) {
                double acc = 0.0;
                // fixed summation order over (k,l) keeps results schedule-independent
                for (int k = 0; k < K; ++k) {
                    double x = m + params.alpha * (k - kc);
                    for (int l = 0; l < L; ++l) {
                        double y = n + params.alpha * (l - lc);
                        acc += sample_bilinear(pf, c, k, l, x, y);
                    }
                }
                rv.channels[c][rv.index(m, n)] = acc * inv_n;
            }
        }
    }
    return rv;
}

FocalStack render_focal_stack(const PlanarField& pf, const std::vector<double>& alphas) {
    if (alphas.empty())
        throw ParamError("focal stack: alphas must be non-empty");
    for (std::size_t i = 1; i < alphas.size(); ++i)
        if (!(alphas[i] > alphas[i - 1]))
            throw ParamError("focal stack: alphas must be strictly increasing");
    FocalStack stack;
    stack.views.reserve(alphas.size());
    for (double a : alphas) stack.views.push_back(render_refocused(pf, RefocusParams{a}));
    return stack;
}

std::vector<double> make_alpha_sweep(double disparity_min, double disparity_max, int count) {
    if (count < 1)
        throw ParamError("alpha sweep: count must be >= 1");
    if (disparity_min > disparity_max)
        throw ParamError("alpha sweep: disparity_min > disparity_max");
    std::vector<double> alphas;
    alphas.reserve(static_cast<std::size_t>(count));
    if (count == 1) {
        alphas.push_back(disparity_min);
        return alphas;
    }
    double step = (disparity_max - disparity_min) / (count - 1);
    for (int i = 0; i < count; ++i)
        alphas.push_back(i == count - 1 ? disparity_max : disparity_min + step * i);
    return alphas;
}

View rendered_to_view(const RenderedView& rv) {
    View v = make_view(rv.width, rv.height);
    for (int y = 0; y < rv.height; ++y)
        for (int x = 0; x < rv.width; ++x)
            for (int c = 0; c < 3; ++c) {
                double r = std::round(rv.at(c, x, y));
                r = r < 0.0 ? 0.0 : (r > 255.0 ? 255.0 : r);
                v.at(x, y, c) = static_cast<std::uint8_t>(r);
            }
    return v;
}

}  // namespace lf
