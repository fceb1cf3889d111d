#include "lf/blocks.hpp"

#include <string>

#include "lf/dct.hpp"
#include "lf/error.hpp"

namespace lf {

namespace {

std::size_t volume(std::span<const int> dims) {
    std::size_t n = 1;
    for (int d : dims) n *= static_cast<std::size_t>(d);
    return n;
}

// Replicate-pad into the padded shape.
std::vector<double> pad_replicate(std::span<const double> data, const BlockGrid& grid) {
    const int d = static_cast<int>(grid.dims.size());
    std::vector<std::size_t> src_stride(d), dst_stride(d);
    std::size_t s = 1, t = 1;
    for (int a = d - 1; a >= 0; --a) {
        src_stride[a] = s;
        dst_stride[a] = t;
        s *= static_cast<std::size_t>(grid.dims[a]);
        t *= static_cast<std::size_t>(grid.padded[a]);
    }
    std::vector<double> out(volume(grid.padded));
    std::vector<int> idx(d, 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::size_t src = 0;
        for (int a = 0; a < d; ++a) {
            int v = idx[a] < grid.dims[a] ? idx[a] : grid.dims[a] - 1;
            src += static_cast<std::size_t>(v) * src_stride[a];
        }
        out[i] = data[src];
        for (int a = d - 1; a >= 0; --a) {
            if (++idx[a] < grid.padded[a]) break;
            idx[a] = 0;
        }
    }
    return out;
}

}  // namespace

BlockGrid make_block_grid(std::span<const int> dims) {
    if (dims.size() < 2 || dims.size() > 4)
        throw ShapeError("block grid: dimensionality must be 2, 3, or 4");
    BlockGrid grid;
    for (int v : dims) {
        if (v < 1)
            throw ShapeError("block grid: all dims must be >= 1");
        grid.dims.push_back(v);
        int padded = (v + kBlockEdge - 1) / kBlockEdge * kBlockEdge;
        grid.padded.push_back(padded);
        grid.blocks_per_axis.push_back(padded / kBlockEdge);
    }
    return grid;
}

std::vector<std::vector<double>> pad_and_partition(std::span<const double> data,
                                                   std::span<const int> dims) {
    BlockGrid grid = make_block_grid(dims);
    if (data.size() != volume(grid.dims))
        throw ShapeError("pad_and_partition: data length " + std::to_string(data.size()) +
                         " does not match dims");
    const int d = static_cast<int>(grid.dims.size());
    std::vector<double> padded = pad_replicate(data, grid);

    std::vector<std::size_t> stride(d);
    std::size_t s = 1;
    for (int a = d - 1; a >= 0; --a) {
        stride[a] = s;
        s *= static_cast<std::size_t>(grid.padded[a]);
    }

    const std::size_t bsize = block_size(d);
    std::vector<std::vector<double>> blocks(grid.block_count());
    std::vector<int> bidx(d, 0);
    for (auto& block : blocks) {
        block.resize(bsize);
        std::vector<int> off(d, 0);
        for (std::size_t i = 0; i < bsize; ++i) {
            std::size_t src = 0;
            for (int a = 0; a < d; ++a)
                src += static_cast<std::size_t>(bidx[a] * kBlockEdge + off[a]) * stride[a];
            block[i] = padded[src];
            for (int a = d - 1; a >= 0; --a) {
                if (++off[a] < kBlockEdge) break;
                off[a] = 0;
            }
        }
        for (int a = d - 1; a >= 0; --a) {
            if (++bidx[a] < grid.blocks_per_axis[a]) break;
            bidx[a] = 0;
        }
    }
    return blocks;
}

std::vector<double> reassemble(const std::vector<std::vector<double>>& blocks,
                               std::span<const int> dims) {
    BlockGrid grid = make_block_grid(dims);
    const int d = static_cast<int>(grid.dims.size());
    if (blocks.size() != grid.block_count())
        throw ShapeError("reassemble: expected " + std::to_string(grid.block_count()) +
                         " blocks, got " + std::to_string(blocks.size()));

    std::vector<std::size_t> stride(d);
    std::size_t s = 1;
    for (int a = d - 1; a >= 0; --a) {
        stride[a] = s;
        s *= static_cast<std::size_t>(grid.dims[a]);
    }

    const std::size_t bsize = block_size(d);
    std::vector<double> out(volume(grid.dims));
    std::vector<int> bidx(d, 0);
    for (const auto& block : blocks) {
        if (block.size() != bsize)
            throw ShapeError("reassemble: block length mismatch");
        std::vector<int> off(d, 0);
        for (std::size_t i = 0; i < bsize; ++i) {
            bool inside = true;
            std::size_t dst = 0;
            for (int a = 0; a < d; ++a) {
                int v = bidx[a] * kBlockEdge + off[a];
                if (v >= grid.dims[a]) {
                    inside = false;
                    break;
                }
                dst += static_cast<std::size_t>(v) * stride[a];
            }
            if (inside) out[dst] = block[i];
            for (int a = d - 1; a >= 0; --a) {
                if (++off[a] < kBlockEdge) break;
                off[a] = 0;
            }
        }
        for (int a = d - 1; a >= 0; --a) {
            if (++bidx[a] < grid.blocks_per_axis[a]) break;
            bidx[a] = 0;
        }
    }
    return out;
}

}  // namespace lf
