#pragma once

#include <span>
#include <vector>

namespace lf {

/// Geometry of a d-dimensional array split into 8^d blocks.
struct BlockGrid {
    std::vector<int> dims;            // original extents
    std::vector<int> padded;          // extents rounded up to multiples of 8
    std::vector<int> blocks_per_axis; // padded / 8

    std::size_t block_count() const {
        std::size_t n = 1;
        for (int b : blocks_per_axis) n *= static_cast<std::size_t>(b);
        return n;
    }
};

BlockGrid make_block_grid(std::span<const int> dims);

/// Pad each axis to a multiple of 8 by replicating the last hyperplane, then
/// cut into 8^d blocks enumerated in row-major order of block indices.
std::vector<std::vector<double>> pad_and_partition(std::span<const double> data,
                                                   std::span<const int> dims);

/// Inverse: place blocks back and crop the padding. Restores the original
/// array exactly when fed pad_and_partition output.
std::vector<double> reassemble(const std::vector<std::vector<double>>& blocks,
                               std::span<const int> dims);

}  // namespace lf
