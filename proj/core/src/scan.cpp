#include "lf/scan.hpp"

#include "lf/error.hpp"

namespace lf {

ScanOrder parse_scan_order(const std::string& s) {
    if (s == "raster") return ScanOrder::Raster;
    if (s == "spiral") return ScanOrder::Spiral;
    throw ParamError("unknown scan order '" + s + "' (expected raster or spiral)");
}

std::vector<std::pair<int, int>> scan_sequence(int grid_rows, int grid_cols, ScanOrder order) {
    if (grid_rows < 1 || grid_cols < 1)
        throw ParamError("scan_sequence: grid dimensions must be >= 1");

    const std::size_t total = static_cast<std::size_t>(grid_rows) * grid_cols;
    std::vector<std::pair<int, int>> seq;
    seq.reserve(total);

    if (order == ScanOrder::Raster) {
        for (int r = 0; r < grid_rows; ++r)
            for (int c = 0; c < grid_cols; ++c) seq.emplace_back(r, c);
        return seq;
    }

    // Spiral from the center cell, first step to the right, arm lengths
    // 1,1,2,2,3,3,...; cells outside the grid are skipped.
    int r = (grid_rows - 1) / 2;
    int c = (grid_cols - 1) / 2;
    static constexpr int dr[4] = {0, 1, 0, -1};  // right, down, left, up
    static constexpr int dc[4] = {1, 0, -1, 0};

    auto emit = [&](int row, int col) {
        if (row >= 0 && row < grid_rows && col >= 0 && col < grid_cols) seq.emplace_back(row, col);
    };
    emit(r, c);
    int dir = 0;
    int arm = 1;
    while (seq.size() < total) {
        for (int rep = 0; rep < 2 && seq.size() < total; ++rep) {
            for (int step = 0; step < arm; ++step) {
                r += dr[dir];
                c += dc[dir];
                emit(r, c);
            }
            dir = (dir + 1) & 3;
        }
        ++arm;
    }
    return seq;
}

}  // namespace lf
