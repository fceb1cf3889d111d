#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "lf/image.hpp"

namespace lf {

/// 4D light field L(k,l,m,n): a grid_rows x grid_cols grid of views,
/// row-major with (row=k, col=l).
struct LightField {
    int grid_rows = 0;  // K
    int grid_cols = 0;  // L
    std::vector<View> views;
    double disparity_min = 0.0;
    double disparity_max = 0.0;

    int width() const { return views.empty() ? 0 : views.front().width; }    // M
    int height() const { return views.empty() ? 0 : views.front().height; }  // N

    const View& view(int row, int col) const { return views[static_cast<std::size_t>(row) * grid_cols + col]; }
    View& view(int row, int col) { return views[static_cast<std::size_t>(row) * grid_cols + col]; }

    /// Total sample positions K*L*M*N (per channel).
    std::uint64_t pixel_count() const {
        return static_cast<std::uint64_t>(grid_rows) * grid_cols * width() * height();
    }

    bool operator==(const LightField&) const = default;
};

/// On-disk description of a light field: JSON object with exactly these keys.
/// file_pattern uses zero-based "{row}"/"{col}" placeholders, optionally
/// zero-padded ("{row:02}").
struct Manifest {
    std::string name;
    int grid_rows = 0;
    int grid_cols = 0;
    int width = 0;
    int height = 0;
    std::string file_pattern;
    double disparity_min = 0.0;
    double disparity_max = 0.0;
};

Manifest parse_manifest(const std::string& json_text);
Manifest read_manifest(const std::filesystem::path& path);
std::string manifest_to_json(const Manifest& m);

/// Expand the pattern for one (row, col); throws FormatError on a bad pattern.
std::string expand_pattern(const std::string& pattern, int row, int col);

/// Load all views named by the manifest; paths are relative to the manifest's
/// directory. Throws LoadError naming the failing view coordinate.
LightField load_light_field(const std::filesystem::path& manifest_path);

/// Write views + manifest into a directory (pattern "<name>_r{row:02}_c{col:02}.ppm").
void save_light_field(const LightField& lf, const std::filesystem::path& dir, const std::string& name);

/// Real-valued working representation, 3 planes indexed ((k*L+l)*M+m)*N+n.
struct PlanarField {
    int grid_rows = 0;  // K
    int grid_cols = 0;  // L
    int width = 0;      // M
    int height = 0;     // N
    std::array<std::vector<double>, 3> channels;
    double disparity_min = 0.0;
    double disparity_max = 0.0;

    std::size_t plane_size() const {
        return static_cast<std::size_t>(grid_rows) * grid_cols * width * height;
    }
    std::size_t index(int k, int l, int m, int n) const {
        return ((static_cast<std::size_t>(k) * grid_cols + l) * width + m) * height + n;
    }
    double at(int c, int k, int l, int m, int n) const { return channels[c][index(k, l, m, n)]; }
    double& at(int c, int k, int l, int m, int n) { return channels[c][index(k, l, m, n)]; }
};

/// 8-bit -> real, value-preserving.
PlanarField to_planar(const LightField& lf);

/// Real -> 8-bit: round half away from zero, clamp to [0,255].
/// Throws NumericError on non-finite samples.
LightField from_planar(const PlanarField& pf);

}  // namespace lf
