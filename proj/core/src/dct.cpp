#include "lf/dct.hpp"

#include <array>
#include <cmath>
#include <string>

#include "lf/error.hpp"

namespace lf {

namespace {

// Orthonormal 8-point DCT-II matrix: basis[u][n] = c_u cos((2n+1)u pi / 16).
const std::array<std::array<double, 8>, 8>& basis() {
    static const auto table = [] {
        std::array<std::array<double, 8>, 8> m{};
        const double pi = std::acos(-1.0);
        for (int u = 0; u < 8; ++u) {
            double cu = u == 0 ? std::sqrt(1.0 / 8.0) : std::sqrt(2.0 / 8.0);
            for (int n = 0; n < 8; ++n)
                m[u][n] = cu * std::cos((2 * n + 1) * u * pi / 16.0);
        }
        return m;
    }();
    return table;
}

void check_length(std::span<double> block, int d) {
    if (d < 2 || d > 4)
        throw ShapeError("dct: dimensionality must be 2, 3, or 4");
    if (block.size() != block_size(d))
        throw ShapeError("dct: block length " + std::to_string(block.size()) + " != 8^" +
                         std::to_string(d));
}

// Apply the 1-D transform along one axis of the 8^d hypercube.
// axis 0 is the slowest-varying index (row-major).
void transform_axis(std::span<double> block, int d, int axis, bool forward) {
    const auto& m = basis();
    std::size_t stride = 1;
    for (int a = axis + 1; a < d; ++a) stride *= kBlockEdge;
    std::size_t outer_count = 1;
    for (int a = 0; a < axis; ++a) outer_count *= kBlockEdge;
    const std::size_t outer_stride = stride * kBlockEdge;

    double line[8];
    for (std::size_t outer = 0; outer < outer_count; ++outer) {
        for (std::size_t inner = 0; inner < stride; ++inner) {
            double* p = block.data() + outer * outer_stride + inner;
            for (int t = 0; t < 8; ++t) line[t] = p[t * stride];
            for (int u = 0; u < 8; ++u) {
                double acc = 0.0;
                if (forward) {
                    for (int n = 0; n < 8; ++n) acc += m[u][n] * line[n];
                } else {
                    for (int n = 0; n < 8; ++n) acc += m[n][u] * line[n];
                }
                p[u * stride] = acc;
            }
        }
    }
}

}  // namespace

double dct_gain(int d) {
    return std::pow(8.0, -(d - 2) / 2.0);
}

void dct_forward(std::span<double> block, int d) {
    check_length(block, d);
    for (int axis = 0; axis < d; ++axis) transform_axis(block, d, axis, true);
    const double g = dct_gain(d);
    if (g != 1.0)
        for (double& v : block) v *= g;
}

void dct_inverse(std::span<double> block, int d) {
    check_length(block, d);
    const double g = dct_gain(d);
    if (g != 1.0)
        for (double& v : block) v /= g;
    for (int axis = 0; axis < d; ++axis) transform_axis(block, d, axis, false);
}

}  // namespace lf
