#pragma once

#include <array>
#include <vector>

#include "lf/image.hpp"
#include "lf/light_field.hpp"

namespace lf {

/// Focal parameter for the shift-sum renderer. Boundary handling is
/// clamp-to-edge and view indices are centered at the grid center; both are
/// fixed, only alpha varies.
struct RefocusParams {
    double alpha = 0.0;
};

/// One refocused image: real-valued planes, row-major (y * width + x).
struct RenderedView {
    int width = 0;
    int height = 0;
    std::array<std::vector<double>, 3> channels;
    double alpha = 0.0;

    std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * width + x; }
    double at(int c, int x, int y) const { return channels[c][index(x, y)]; }
    double& at(int c, int x, int y) { return channels[c][index(x, y)]; }
};

struct FocalStack {
    std::vector<RenderedView> views;  // strictly increasing alpha
};

/// Shift-sum refocusing: E(m,n) = (1/(K*L)) sum_{k,l} L(k,l, m+a*kc, n+a*lc)
/// with kc = k-(K-1)/2, lc = l-(L-1)/2, bilinear interpolation in (m,n) and
/// clamp-to-edge for out-of-range coordinates.
RenderedView render_refocused(const PlanarField& pf, const RefocusParams& params);

/// Render one view per alpha; alphas must be non-empty and strictly increasing.
FocalStack render_focal_stack(const PlanarField& pf, const std::vector<double>& alphas);

/// count linearly spaced values from disparity_min to disparity_max inclusive;
/// count == 1 returns just disparity_min.
std::vector<double> make_alpha_sweep(double disparity_min, double disparity_max, int count);

/// Round to 8 bits (half away from zero, clamped) for export or metrics.
View rendered_to_view(const RenderedView& rv);

}  // namespace lf
