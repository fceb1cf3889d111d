#include <doctest.h>

#include <sstream>

#include "lf/error.hpp"
#include "lf/sweep.hpp"
#include "synthetic.hpp"

namespace {

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("csv number formatting") {
    CHECK(lf::format_csv_number(0.5) == "0.5");
    CHECK(lf::format_csv_number(48.130803) == "48.1308");
    CHECK(lf::format_csv_number(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(lf::format_csv_number(123456.0) == "123456");
}

TEST_CASE("sweep covers the mode x quality grid in sorted order") {
    lf::LightField field =
        lftest::translated_light_field(lftest::smooth_view(16, 16), 2, 2, 0.5);
    lf::SweepConfig cfg;
    cfg.modes = {4, 2};       // deliberately unsorted
    cfg.qualities = {80, 20};
    cfg.alpha_count = 3;
    std::vector<lf::RDPoint> points = lf::rd_sweep(field, cfg);
    REQUIRE(points.size() == 4);
    CHECK(points[0].mode == "jpeg2d");
    CHECK(points[0].quality == 20);
    CHECK(points[1].quality == 80);
    CHECK(points[2].mode == "jpeg4d");
    for (const auto& p : points) {
        CHECK(p.bpp > 0.0);
        CHECK(p.psnr_mean > 10.0);
    }
    // more quality -> more bits, per mode
    CHECK(points[0].bpp < points[1].bpp);
    CHECK(points[2].bpp < points[3].bpp);
}

TEST_CASE("sweep csv has the documented header and shape") {
    lf::LightField field =
        lftest::translated_light_field(lftest::smooth_view(16, 16), 2, 2, 0.5);
    lf::SweepConfig cfg;
    cfg.modes = {2, 3};
    cfg.qualities = {50};
    cfg.alpha_count = 2;
    auto lines = lines_of(lf::rd_sweep_csv(field, cfg));
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "mode,quality,bpp,psnr_mean");
    CHECK(lines[1].substr(0, 10) == "jpeg2d,50,");
    CHECK(lines[2].substr(0, 10) == "jpeg3d,50,");
}

TEST_CASE("experiment0 reports direct and rendered quality per quality") {
    lf::LightField field =
        lftest::translated_light_field(lftest::smooth_view(16, 16), 2, 2, 0.5);
    std::vector<lf::RDPoint> points = lf::experiment0(field, {30, 70}, 3);
    REQUIRE(points.size() == 2);
    for (const auto& p : points) {
        CHECK(p.mode == "jpeg4d");
        CHECK(p.psnr_direct > 10.0);
        // averaging across views masks coding error: rendered quality should
        // not fall below the direct measurement on this synthetic field
        CHECK(p.psnr_mean >= p.psnr_direct - 0.5);
    }
    CHECK(points[0].quality == 30);

    auto lines = lines_of(lf::experiment0_csv(field, {30, 70}, 3));
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "quality,bpp,psnr_direct,psnr_rendered_mean");
}

TEST_CASE("sweep validates its configuration") {
    lf::LightField field = lftest::random_light_field(91, 2, 2, 8, 8);
    lf::SweepConfig cfg;
    CHECK_THROWS_AS(lf::rd_sweep(field, cfg), lf::ParamError);  // no modes
    cfg.modes = {2};
    CHECK_THROWS_AS(lf::rd_sweep(field, cfg), lf::ParamError);  // no qualities
    cfg.qualities = {0};
    CHECK_THROWS_AS(lf::rd_sweep(field, cfg), lf::ParamError);
}
