#pragma once

#include <cstddef>
#include <span>

namespace lf {

constexpr int kBlockEdge = 8;

/// 8^d coefficients in a block.
constexpr std::size_t block_size(int d) {
    std::size_t n = 1;
    for (int i = 0; i < d; ++i) n *= kBlockEdge;
    return n;
}

/// Scale applied to all coefficients after the forward transform so the
/// coefficient dynamic range stays at the 2D level: 8^(-(d-2)/2).
double dct_gain(int d);

/// Separable orthonormal DCT-II over all d axes of an 8^d block (row-major
/// over (u_1..u_d)), then multiply by dct_gain(d). In place.
void dct_forward(std::span<double> block, int d);

/// Divide by dct_gain(d), then separable orthonormal DCT-III. In place.
/// dct_inverse(dct_forward(x)) == x within 1e-9.
void dct_inverse(std::span<double> block, int d);

}  // namespace lf
