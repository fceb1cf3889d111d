#include <doctest.h>

#include <random>
#include <vector>

#include "lf/blocks.hpp"
#include "lf/error.hpp"

TEST_CASE("grid geometry rounds up to multiples of 8") {
    std::vector<int> dims{17, 8, 9};
    lf::BlockGrid grid = lf::make_block_grid(dims);
    CHECK(grid.padded == std::vector<int>{24, 8, 16});
    CHECK(grid.blocks_per_axis == std::vector<int>{3, 1, 2});
    CHECK(grid.block_count() == 6);
}

TEST_CASE("an exactly-8 array becomes one unpadded block") {
    std::vector<int> dims{8, 8};
    std::vector<double> data(64);
    for (std::size_t i = 0; i < data.size(); ++i) data[i] = static_cast<double>(i);
    auto blocks = lf::pad_and_partition(data, dims);
    REQUIRE(blocks.size() == 1);
    CHECK(blocks[0] == data);
}

TEST_CASE("padding replicates the last hyperplane") {
    // 1D-like case embedded in 2D: 9 rows x 8 cols, row 8 pads rows 9..15
    std::vector<int> dims{9, 8};
    std::vector<double> data(9 * 8);
    for (int r = 0; r < 9; ++r)
        for (int c = 0; c < 8; ++c) data[r * 8 + c] = r * 100.0 + c;
    auto blocks = lf::pad_and_partition(data, dims);
    REQUIRE(blocks.size() == 2);
    // second block: row 0 is source row 8, rows 1..7 replicate it
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c) CHECK(blocks[1][r * 8 + c] == 800.0 + c);
}

TEST_CASE("blocks are enumerated row-major over block indices") {
    std::vector<int> dims{16, 16};
    std::vector<double> data(256);
    for (int r = 0; r < 16; ++r)
        for (int c = 0; c < 16; ++c) data[r * 16 + c] = (r / 8) * 2.0 + (c / 8);
    auto blocks = lf::pad_and_partition(data, dims);
    REQUIRE(blocks.size() == 4);
    for (int b = 0; b < 4; ++b)
        for (double v : blocks[b]) CHECK(v == static_cast<double>(b));
}

TEST_CASE("reassemble inverts pad_and_partition exactly") {
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> dist(-500.0, 500.0);
    std::uniform_int_distribution<int> dim(1, 21);
    std::vector<std::vector<int>> shapes{{5, 13}, {dim(rng), dim(rng)},
                                         {3, 9, 10}, {2, 2, 9, 11}};
    for (const auto& dims : shapes) {
        std::size_t total = 1;
        for (int d : dims) total *= static_cast<std::size_t>(d);
        std::vector<double> data(total);
        for (auto& v : data) v = dist(rng);
        auto blocks = lf::pad_and_partition(data, dims);
        lf::BlockGrid grid = lf::make_block_grid(dims);
        CHECK(blocks.size() == grid.block_count());
        CHECK(lf::reassemble(blocks, dims) == data);
    }
}

TEST_CASE("shape errors are reported") {
    std::vector<int> dims{0, 8};
    std::vector<double> data;
    CHECK_THROWS_AS(lf::make_block_grid(dims), lf::ShapeError);
    std::vector<int> ok{2, 2};
    CHECK_THROWS_AS(lf::pad_and_partition(data, ok), lf::ShapeError);  // size mismatch
}
