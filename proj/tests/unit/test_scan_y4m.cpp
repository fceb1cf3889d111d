#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <string>

#include "lf/error.hpp"
#include "lf/scan.hpp"
#include "lf/y4m.hpp"
#include "synthetic.hpp"

TEST_CASE("scan order names") {
    CHECK(lf::parse_scan_order("raster") == lf::ScanOrder::Raster);
    CHECK(lf::parse_scan_order("spiral") == lf::ScanOrder::Spiral);
    CHECK_THROWS_AS(lf::parse_scan_order("zigzag"), lf::ParamError);
}

TEST_CASE("raster order is row-major") {
    auto seq = lf::scan_sequence(2, 3, lf::ScanOrder::Raster);
    CHECK(seq == std::vector<std::pair<int, int>>{
                     {0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}});
}

TEST_CASE("3x3 spiral follows the worked trace") {
    auto seq = lf::scan_sequence(3, 3, lf::ScanOrder::Spiral);
    CHECK(seq == std::vector<std::pair<int, int>>{{1, 1},
                                                  {1, 2},
                                                  {2, 2},
                                                  {2, 1},
                                                  {2, 0},
                                                  {1, 0},
                                                  {0, 0},
                                                  {0, 1},
                                                  {0, 2}});
}

TEST_CASE("spiral starts at the floor-center and steps right") {
    auto seq = lf::scan_sequence(4, 4, lf::ScanOrder::Spiral);
    CHECK(seq[0] == std::pair<int, int>{1, 1});
    CHECK(seq[1] == std::pair<int, int>{1, 2});
}

TEST_CASE("both orders are permutations of the grid") {
    for (auto [r, c] : {std::pair{1, 1}, {1, 7}, {5, 1}, {2, 3}, {4, 6}, {15, 15}})
        for (auto order : {lf::ScanOrder::Raster, lf::ScanOrder::Spiral}) {
            auto seq = lf::scan_sequence(r, c, order);
            REQUIRE(static_cast<int>(seq.size()) == r * c);
            auto sorted = seq;
            std::sort(sorted.begin(), sorted.end());
            CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
            for (auto [kr, kc] : seq) {
                CHECK(kr >= 0);
                CHECK(kr < r);
                CHECK(kc >= 0);
                CHECK(kc < c);
            }
        }
}

TEST_CASE("y4m header is byte-exact and frames carry three full planes") {
    lf::LightField field = lftest::random_light_field(81, 2, 2, 6, 4);
    std::vector<std::uint8_t> data = lf::export_y4m(field, lf::ScanOrder::Raster);
    std::string expect_header = "YUV4MPEG2 W6 H4 F25:1 Ip A1:1 C444\n";
    REQUIRE(data.size() == expect_header.size() + 4 * (6 + 3 * 24));
    CHECK(std::string(data.begin(), data.begin() + expect_header.size()) == expect_header);
    CHECK(std::string(data.begin() + expect_header.size(),
                      data.begin() + expect_header.size() + 6) == "FRAME\n");
}

TEST_CASE("y4m round trip is within one code per sample") {
    lf::LightField field = lftest::random_light_field(82, 3, 2, 9, 7);
    for (auto order : {lf::ScanOrder::Raster, lf::ScanOrder::Spiral}) {
        std::vector<std::uint8_t> data = lf::export_y4m(field, order);
        lf::LightField back = lf::import_y4m(data, 3, 2, order);
        REQUIRE(back.views.size() == field.views.size());
        for (std::size_t v = 0; v < field.views.size(); ++v)
            for (std::size_t i = 0; i < field.views[v].samples.size(); ++i)
                CHECK(std::abs(static_cast<int>(field.views[v].samples[i]) -
                               static_cast<int>(back.views[v].samples[i])) <= 1);
    }
}

TEST_CASE("import rejects mismatched headers and frame counts") {
    lf::LightField field = lftest::random_light_field(83, 2, 2, 4, 4);
    std::vector<std::uint8_t> data = lf::export_y4m(field, lf::ScanOrder::Raster);

    CHECK_THROWS_AS(lf::import_y4m(data, 2, 3, lf::ScanOrder::Raster), lf::FormatError);

    auto truncated = data;
    truncated.resize(truncated.size() - 10);
    CHECK_THROWS_AS(lf::import_y4m(truncated, 2, 2, lf::ScanOrder::Raster), lf::FormatError);

    auto trailing = data;
    trailing.push_back(0);
    CHECK_THROWS_AS(lf::import_y4m(trailing, 2, 2, lf::ScanOrder::Raster), lf::FormatError);

    auto subsampled = data;
    std::string s(subsampled.begin(), subsampled.end());
    auto pos = s.find("C444");
    s.replace(pos, 4, "C420");
    std::vector<std::uint8_t> chroma420(s.begin(), s.end());
    CHECK_THROWS_AS(lf::import_y4m(chroma420, 2, 2, lf::ScanOrder::Raster), lf::FormatError);
}
