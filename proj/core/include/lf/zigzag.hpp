#pragma once

#include <vector>

namespace lf {

/// Coefficient scan order for 8^d blocks: all multi-indices sorted by
/// ascending total index sum, ties broken lexicographically on (u_1..u_d).
/// Returned as linear (row-major) offsets, scan position -> block offset.
/// Uniform across d; deviates from the serpentine 2D JPEG scan.
std::vector<int> zigzag_order(int d);

}  // namespace lf
