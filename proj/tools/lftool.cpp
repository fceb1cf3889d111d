// lftool: light-field codec laboratory command line.
//
// Subcommands: encode, decode, refocus, sweep, exp0, y4m-export, y4m-import.
// Exit codes: 0 success, 1 processing error, 2 usage error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lf/codec.hpp"
#include "lf/error.hpp"
#include "lf/image.hpp"
#include "lf/light_field.hpp"
#include "lf/metrics.hpp"
#include "lf/refocus.hpp"
#include "lf/scan.hpp"
#include "lf/sweep.hpp"
#include "lf/y4m.hpp"

namespace {

namespace fs = std::filesystem;

std::vector<int> parse_int_list(const std::string& s, const char* what) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        std::string tok = s.substr(pos, comma - pos);
        if (tok.empty())
            throw lf::ParamError(std::string("empty entry in ") + what + " list");
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw lf::ParamError(std::string("bad integer '") + tok + "' in " + what + " list");
        }
        pos = comma + 1;
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& s, const char* what) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        std::string tok = s.substr(pos, comma - pos);
        if (tok.empty())
            throw lf::ParamError(std::string("empty entry in ") + what + " list");
        try {
            out.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw lf::ParamError(std::string("bad number '") + tok + "' in " + what + " list");
        }
        pos = comma + 1;
    }
    return out;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw lf::Error("cannot open output file: " + path.string());
    out << text;
}

int run(int argc, char** argv) {
    CLI::App app{"4D light-field compression laboratory"};
    app.require_subcommand(1);

    // encode
    auto* enc = app.add_subcommand("encode", "Compress a light field into an LFJ1 bitstream");
    std::string enc_manifest, enc_mode = "4d", enc_out;
    int enc_quality = 50;
    enc->add_option("--manifest", enc_manifest, "Light field manifest JSON")->required();
    enc->add_option("--mode", enc_mode, "Codec dimensionality: 2d, 3d, or 4d");
    enc->add_option("--quality", enc_quality, "Quality 1..100")->check(CLI::Range(1, 100));
    enc->add_option("--out", enc_out, "Output .lfj file")->required();

    // decode
    auto* dec = app.add_subcommand("decode", "Decompress an LFJ1 bitstream to PPM views");
    std::string dec_in, dec_out_dir, dec_name = "decoded";
    dec->add_option("--in", dec_in, "Input .lfj file")->required();
    dec->add_option("--out-dir", dec_out_dir, "Output directory for views + manifest")->required();
    dec->add_option("--name", dec_name, "Base name for output files");

    // refocus
    auto* ref = app.add_subcommand("refocus", "Render a PPM focal stack");
    std::string ref_manifest, ref_out_dir, ref_alphas, ref_prefix = "refocus";
    int ref_alpha_count = 5;
    ref->add_option("--manifest", ref_manifest, "Light field manifest JSON")->required();
    ref->add_option("--alphas", ref_alphas,
                    "Comma-separated focal parameters (default: sweep of the disparity range)");
    ref->add_option("--alpha-count", ref_alpha_count, "Sweep size when --alphas is absent");
    ref->add_option("--out-dir", ref_out_dir, "Output directory")->required();
    ref->add_option("--prefix", ref_prefix, "Output file prefix");

    // sweep
    auto* swp = app.add_subcommand("sweep", "Rate-distortion sweep over modes and qualities");
    std::string swp_manifest, swp_modes = "2d,3d,4d", swp_qualities = "10,30,50,70,90", swp_out;
    int swp_alpha_count = 5;
    swp->add_option("--manifest", swp_manifest, "Light field manifest JSON")->required();
    swp->add_option("--modes", swp_modes, "Comma-separated modes (2d,3d,4d)");
    swp->add_option("--qualities", swp_qualities, "Comma-separated qualities");
    swp->add_option("--alpha-count", swp_alpha_count, "Focal planes per PSNR measurement");
    swp->add_option("--out", swp_out, "Output CSV")->required();

    // exp0
    auto* exp0 = app.add_subcommand("exp0", "Direct vs rendered PSNR for the 4D codec");
    std::string exp0_manifest, exp0_qualities = "10,30,50,70,90", exp0_out;
    int exp0_alpha_count = 5;
    exp0->add_option("--manifest", exp0_manifest, "Light field manifest JSON")->required();
    exp0->add_option("--qualities", exp0_qualities, "Comma-separated qualities");
    exp0->add_option("--alpha-count", exp0_alpha_count, "Focal planes per PSNR measurement");
    exp0->add_option("--out", exp0_out, "Output CSV")->required();

    // y4m-export
    auto* yexp = app.add_subcommand("y4m-export", "Write views as a YUV4MPEG2 pseudo-sequence");
    std::string yexp_manifest, yexp_out, yexp_order = "raster";
    yexp->add_option("--manifest", yexp_manifest, "Light field manifest JSON")->required();
    yexp->add_option("--order", yexp_order, "Frame order: raster or spiral");
    yexp->add_option("--out", yexp_out, "Output .y4m file")->required();

    // y4m-import
    auto* yimp = app.add_subcommand("y4m-import", "Rebuild a light field from a pseudo-sequence");
    std::string yimp_in, yimp_out_dir, yimp_order = "raster", yimp_name = "imported";
    int yimp_rows = 0, yimp_cols = 0;
    yimp->add_option("--in", yimp_in, "Input .y4m file")->required();
    yimp->add_option("--rows", yimp_rows, "Grid rows (K)")->required();
    yimp->add_option("--cols", yimp_cols, "Grid cols (L)")->required();
    yimp->add_option("--order", yimp_order, "Frame order: raster or spiral");
    yimp->add_option("--out-dir", yimp_out_dir, "Output directory for views + manifest")->required();
    yimp->add_option("--name", yimp_name, "Base name for output files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            app.exit(e);
            return 0;
        }
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*enc) {
            lf::LightField field = lf::load_light_field(enc_manifest);
            lf::CodecConfig cfg{lf::mode_dimensionality(enc_mode), enc_quality};
            auto bytes = lf::encode(field, cfg).serialize();
            lf::write_file(enc_out, bytes);
            std::printf("%s: %zu bytes, %.4f bpp\n", enc_out.c_str(), bytes.size(),
                        lf::bits_per_pixel(bytes.size(), field.grid_rows, field.grid_cols,
                                           field.width(), field.height()));
        } else if (*dec) {
            lf::LightField field = lf::decode(lf::read_file(dec_in));
            lf::save_light_field(field, dec_out_dir, dec_name);
            std::printf("%s: %dx%d grid of %dx%d views\n", dec_out_dir.c_str(), field.grid_rows,
                        field.grid_cols, field.width(), field.height());
        } else if (*ref) {
            lf::LightField field = lf::load_light_field(ref_manifest);
            std::vector<double> alphas =
                ref_alphas.empty()
                    ? lf::make_alpha_sweep(field.disparity_min, field.disparity_max, ref_alpha_count)
                    : parse_double_list(ref_alphas, "alphas");
            lf::PlanarField pf = lf::to_planar(field);
            fs::create_directories(ref_out_dir);
            for (std::size_t i = 0; i < alphas.size(); ++i) {
                auto rendered = lf::render_refocused(pf, lf::RefocusParams{alphas[i]});
                char name[64];
                std::snprintf(name, sizeof name, "%s_%02zu_alpha%+.4f.ppm", ref_prefix.c_str(), i,
                              alphas[i]);
                lf::save_view(lf::rendered_to_view(rendered), fs::path(ref_out_dir) / name);
            }
            std::printf("%s: %zu focal planes\n", ref_out_dir.c_str(), alphas.size());
        } else if (*swp) {
            lf::LightField field = lf::load_light_field(swp_manifest);
            lf::SweepConfig cfg;
            for (const std::string& m : {swp_modes}) {
                std::size_t pos = 0;
                while (pos <= m.size()) {
                    std::size_t comma = m.find(',', pos);
                    if (comma == std::string::npos) comma = m.size();
                    cfg.modes.push_back(lf::mode_dimensionality(m.substr(pos, comma - pos)));
                    pos = comma + 1;
                }
            }
            cfg.qualities = parse_int_list(swp_qualities, "qualities");
            cfg.alpha_count = swp_alpha_count;
            write_text(swp_out, lf::rd_sweep_csv(field, cfg));
            std::printf("%s: %zu rows\n", swp_out.c_str(), cfg.modes.size() * cfg.qualities.size());
        } else if (*exp0) {
            lf::LightField field = lf::load_light_field(exp0_manifest);
            auto qualities = parse_int_list(exp0_qualities, "qualities");
            write_text(exp0_out, lf::experiment0_csv(field, qualities, exp0_alpha_count));
            std::printf("%s: %zu rows\n", exp0_out.c_str(), qualities.size());
        } else if (*yexp) {
            lf::LightField field = lf::load_light_field(yexp_manifest);
            lf::write_file(yexp_out, lf::export_y4m(field, lf::parse_scan_order(yexp_order)));
            std::printf("%s: %d frames\n", yexp_out.c_str(), field.grid_rows * field.grid_cols);
        } else if (*yimp) {
            lf::LightField field = lf::import_y4m(lf::read_file(yimp_in), yimp_rows, yimp_cols,
                                                  lf::parse_scan_order(yimp_order));
            lf::save_light_field(field, yimp_out_dir, yimp_name);
            std::printf("%s: %dx%d grid of %dx%d views\n", yimp_out_dir.c_str(), field.grid_rows,
                        field.grid_cols, field.width(), field.height());
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    return run(argc, argv);
}
