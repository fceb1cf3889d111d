#pragma once

#include <string>
#include <utility>
#include <vector>

namespace lf {

enum class ScanOrder { Raster, Spiral };

ScanOrder parse_scan_order(const std::string& s);

/// Pseudo-sequence view ordering. Raster is row-major. Spiral starts at
/// (floor((K-1)/2), floor((L-1)/2)), steps right first, turns after arms of
/// length 1,1,2,2,3,3,... and skips cells outside the grid. Both are
/// permutations of the K x L grid.
std::vector<std::pair<int, int>> scan_sequence(int grid_rows, int grid_cols, ScanOrder order);

}  // namespace lf
