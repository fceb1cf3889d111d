#include <doctest.h>

#include <cmath>

#include "lf/error.hpp"
#include "lf/refocus.hpp"
#include "synthetic.hpp"

TEST_CASE("alpha sweep endpoints and degenerate cases") {
    std::vector<double> a = lf::make_alpha_sweep(-1.0, 1.0, 5);
    CHECK(a == std::vector<double>{-1.0, -0.5, 0.0, 0.5, 1.0});
    CHECK(lf::make_alpha_sweep(0.25, 0.75, 2) == std::vector<double>{0.25, 0.75});
    CHECK(lf::make_alpha_sweep(0.3, 0.9, 1) == std::vector<double>{0.3});
    CHECK_THROWS_AS(lf::make_alpha_sweep(0.0, 1.0, 0), lf::ParamError);
}

TEST_CASE("alpha 0 is the plain average of the views") {
    lf::LightField field = lftest::random_light_field(13, 3, 3, 7, 5);
    lf::PlanarField pf = lf::to_planar(field);
    lf::RenderedView rv = lf::render_refocused(pf, {0.0});
    REQUIRE(rv.width == 7);
    REQUIRE(rv.height == 5);
    for (int c = 0; c < 3; ++c)
        for (int y = 0; y < 5; ++y)
            for (int x = 0; x < 7; ++x) {
                double sum = 0.0;
                for (const lf::View& v : field.views) sum += v.at(x, y, c);
                CHECK(rv.at(c, x, y) == doctest::Approx(sum / 9.0).epsilon(1e-12));
            }
}

TEST_CASE("a constant field renders to the constant at any alpha") {
    lf::PlanarField pf = lf::to_planar(lftest::constant_light_field(3, 3, 8, 6, 77));
    for (double alpha : {-1.5, -0.3, 0.8, 2.0}) {
        lf::RenderedView rv = lf::render_refocused(pf, {alpha});
        for (int c = 0; c < 3; ++c)
            for (double v : rv.channels[c]) CHECK(v == doctest::Approx(77.0).epsilon(1e-12));
    }
}

TEST_CASE("refocusing at the true integer disparity re-registers the views") {
    // views translated by exactly 1 px per grid step: at alpha == 1 every
    // view contributes the base image again (away from the clamped borders),
    // so the render equals the base exactly in the interior.
    lf::View base = lftest::smooth_view(24, 20);
    lf::LightField field = lftest::translated_light_field(base, 3, 3, 1.0);
    lf::RenderedView rv = lf::render_refocused(lf::to_planar(field), {1.0});
    int margin = 2;  // 1 px shift per step, (3-1)/2 = 1 step max, +1 safety
    for (int c = 0; c < 3; ++c)
        for (int y = margin; y < 20 - margin; ++y)
            for (int x = margin; x < 24 - margin; ++x)
                CHECK(rv.at(c, x, y) == doctest::Approx(base.at(x, y, c)).epsilon(1e-9));
}

TEST_CASE("off-focus alphas blur: interior variance drops") {
    lf::View base = lftest::smooth_view(32, 24);
    lf::LightField field = lftest::translated_light_field(base, 5, 5, 1.0);
    lf::PlanarField pf = lf::to_planar(field);
    auto interior_error = [&](double alpha) {
        lf::RenderedView rv = lf::render_refocused(pf, {alpha});
        double err = 0.0;
        for (int y = 4; y < 20; ++y)
            for (int x = 4; x < 28; ++x)
                err += std::abs(rv.at(0, x, y) - base.at(x, y, 0));
        return err;
    };
    CHECK(interior_error(1.0) < interior_error(0.0));
    CHECK(interior_error(1.0) < interior_error(2.0));
}

TEST_CASE("rendering is linear in the input field") {
    lf::LightField f1 = lftest::random_light_field(31, 2, 2, 9, 7);
    lf::LightField f2 = lftest::random_light_field(32, 2, 2, 9, 7);
    lf::PlanarField p1 = lf::to_planar(f1);
    lf::PlanarField p2 = lf::to_planar(f2);
    lf::PlanarField sum = p1;
    for (int c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < sum.channels[c].size(); ++i)
            sum.channels[c][i] += p2.channels[c][i];
    double alpha = 0.37;
    lf::RenderedView r1 = lf::render_refocused(p1, {alpha});
    lf::RenderedView r2 = lf::render_refocused(p2, {alpha});
    lf::RenderedView rs = lf::render_refocused(sum, {alpha});
    for (int c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < rs.channels[c].size(); ++i)
            CHECK(rs.channels[c][i] ==
                  doctest::Approx(r1.channels[c][i] + r2.channels[c][i]).epsilon(1e-9));
}

TEST_CASE("focal stacks require strictly increasing alphas") {
    lf::PlanarField pf = lf::to_planar(lftest::random_light_field(41, 2, 2, 8, 8));
    lf::FocalStack stack = lf::render_focal_stack(pf, {-0.5, 0.0, 0.5});
    REQUIRE(stack.views.size() == 3);
    CHECK(stack.views[0].alpha == -0.5);
    CHECK(stack.views[2].alpha == 0.5);
    CHECK_THROWS_AS(lf::render_focal_stack(pf, {0.5, 0.5}), lf::ParamError);
    CHECK_THROWS_AS(lf::render_focal_stack(pf, {}), lf::ParamError);
}

TEST_CASE("rendered_to_view rounds half away from zero and clamps") {
    lf::RenderedView rv;
    rv.width = 2;
    rv.height = 1;
    for (int c = 0; c < 3; ++c) rv.channels[c] = {0.0, 0.0};
    rv.channels[0] = {127.5, 260.0};
    rv.channels[1] = {-4.0, 12.49};
    lf::View v = lf::rendered_to_view(rv);
    CHECK(v.at(0, 0, 0) == 128);
    CHECK(v.at(1, 0, 0) == 255);
    CHECK(v.at(0, 0, 1) == 0);
    CHECK(v.at(1, 0, 1) == 12);
}
