#include <doctest.h>

#include <filesystem>
#include <random>

#include "lf/error.hpp"
#include "lf/light_field.hpp"
#include "synthetic.hpp"

namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("lflab_test_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

void write_manifest(const fs::path& where, const std::string& text) {
    lf::write_file(where, std::span(reinterpret_cast<const std::uint8_t*>(text.data()),
                                    text.size()));
}

std::string manifest_json(int rows, int cols, int w, int h, const std::string& pattern) {
    return "{\"name\":\"t\",\"grid_rows\":" + std::to_string(rows) +
           ",\"grid_cols\":" + std::to_string(cols) + ",\"width\":" + std::to_string(w) +
           ",\"height\":" + std::to_string(h) + ",\"file_pattern\":\"" + pattern +
           "\",\"disparity_min\":-1.0,\"disparity_max\":1.0}";
}

}  // namespace

TEST_CASE("pattern expansion handles zero-padding") {
    CHECK(lf::expand_pattern("v_{row}_{col}.ppm", 3, 11) == "v_3_11.ppm");
    CHECK(lf::expand_pattern("v_{row:02}_{col:03}.ppm", 3, 11) == "v_03_011.ppm");
    CHECK_THROWS_AS(lf::expand_pattern("v_{row}.ppm", 0, 0), lf::FormatError);
    CHECK_THROWS_AS(lf::expand_pattern("v_{row}_{colx}.ppm", 0, 0), lf::FormatError);
}

TEST_CASE("load_light_field on a 1x1 manifest") {
    TempDir tmp;
    std::mt19937 rng(11);
    lf::View v = lftest::random_view(rng, 4, 3);
    lf::save_view(v, tmp.path / "v_0_0.ppm");
    write_manifest(tmp.path / "m.json", manifest_json(1, 1, 4, 3, "v_{row}_{col}.ppm"));

    lf::LightField field = lf::load_light_field(tmp.path / "m.json");
    CHECK(field.grid_rows == 1);
    CHECK(field.grid_cols == 1);
    CHECK(field.views.front() == v);
    CHECK(field.disparity_min == -1.0);
    CHECK(field.disparity_max == 1.0);
}

TEST_CASE("views are ordered row-major by (row, col)") {
    TempDir tmp;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            lf::save_view(lf::make_view(2, 2, static_cast<std::uint8_t>(r * 10 + c)),
                          tmp.path / ("v_" + std::to_string(r) + "_" + std::to_string(c) + ".ppm"));
    write_manifest(tmp.path / "m.json", manifest_json(2, 2, 2, 2, "v_{row}_{col}.ppm"));

    lf::LightField field = lf::load_light_field(tmp.path / "m.json");
    CHECK(field.views[1].samples[0] == 1);   // row 0, col 1
    CHECK(field.views[2].samples[0] == 10);  // row 1, col 0
}

TEST_CASE("15x15 grid geometry is preserved") {
    TempDir tmp;
    for (int r = 0; r < 15; ++r)
        for (int c = 0; c < 15; ++c)
            lf::save_view(lf::make_view(6, 4),
                          tmp.path / ("v_" + std::to_string(r) + "_" + std::to_string(c) + ".ppm"));
    write_manifest(tmp.path / "m.json", manifest_json(15, 15, 6, 4, "v_{row}_{col}.ppm"));

    lf::LightField field = lf::load_light_field(tmp.path / "m.json");
    CHECK(field.grid_rows == 15);
    CHECK(field.grid_cols == 15);
    CHECK(field.views.size() == 225);
    CHECK(field.width() == 6);
    CHECK(field.height() == 4);
}

TEST_CASE("load errors name the failing view coordinate") {
    TempDir tmp;
    lf::save_view(lf::make_view(2, 2), tmp.path / "v_0_0.ppm");
    lf::save_view(lf::make_view(3, 2), tmp.path / "v_0_1.ppm");  // wrong width

    SUBCASE("dimension mismatch") {
        write_manifest(tmp.path / "m.json", manifest_json(1, 2, 2, 2, "v_{row}_{col}.ppm"));
        CHECK_THROWS_WITH_AS(lf::load_light_field(tmp.path / "m.json"),
                             doctest::Contains("(0,1)"), lf::LoadError);
    }
    SUBCASE("missing file") {
        write_manifest(tmp.path / "m.json", manifest_json(2, 1, 2, 2, "v_{row}_{col}.ppm"));
        CHECK_THROWS_WITH_AS(lf::load_light_field(tmp.path / "m.json"),
                             doctest::Contains("(1,0)"), lf::LoadError);
    }
    SUBCASE("pattern collision") {
        // without a separator, (1,11) and (11,1) both expand to v111.ppm
        for (int r = 0; r < 12; ++r)
            for (int c = 0; c < 12; ++c)
                lf::save_view(lf::make_view(2, 2),
                              tmp.path / ("v" + std::to_string(r) + std::to_string(c) + ".ppm"));
        write_manifest(tmp.path / "m.json", manifest_json(12, 12, 2, 2, "v{row}{col}.ppm"));
        CHECK_THROWS_WITH_AS(lf::load_light_field(tmp.path / "m.json"),
                             doctest::Contains("collision"), lf::LoadError);
    }
}

TEST_CASE("loading is deterministic") {
    TempDir tmp;
    std::mt19937 rng(5);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 3; ++c)
            lf::save_view(lftest::random_view(rng, 5, 4),
                          tmp.path / ("v_" + std::to_string(r) + "_" + std::to_string(c) + ".ppm"));
    write_manifest(tmp.path / "m.json", manifest_json(2, 3, 5, 4, "v_{row}_{col}.ppm"));
    CHECK(lf::load_light_field(tmp.path / "m.json") == lf::load_light_field(tmp.path / "m.json"));
}

TEST_CASE("planar conversion endpoints, rounding and clamping") {
    lf::LightField field = lftest::constant_light_field(1, 1, 2, 1, 255);
    lf::PlanarField pf = lf::to_planar(field);
    CHECK(pf.channels[0][0] == 255.0);

    pf.channels[0][0] = 127.5;   // rounds half away from zero
    pf.channels[1][0] = -3.2;    // clamps to 0
    pf.channels[2][0] = 300.0;   // clamps to 255
    lf::LightField back = lf::from_planar(pf);
    CHECK(back.views[0].samples[0] == 128);
    CHECK(back.views[0].samples[1] == 0);
    CHECK(back.views[0].samples[2] == 255);

    pf.channels[0][0] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(lf::from_planar(pf), lf::NumericError);
}

TEST_CASE("planar round-trip is the identity on random light fields") {
    for (std::uint32_t seed = 0; seed < 5; ++seed) {
        lf::LightField field = lftest::random_light_field(seed, 2, 3, 7, 5);
        CHECK(lf::from_planar(lf::to_planar(field)) == field);
    }
}
