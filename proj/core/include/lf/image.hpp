#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace lf {

/// One sub-aperture image: 8-bit RGB, channel-interleaved, row-major.
struct View {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> samples;  // width * height * 3

    std::uint8_t at(int x, int y, int c) const {
        return samples[static_cast<std::size_t>(y * width + x) * 3 + c];
    }
    std::uint8_t& at(int x, int y, int c) {
        return samples[static_cast<std::size_t>(y * width + x) * 3 + c];
    }

    bool operator==(const View&) const = default;
};

View make_view(int width, int height, std::uint8_t fill = 0);

/// Decode a binary P6 PPM (maxval 255). Throws FormatError on anything else.
View read_ppm(std::span<const std::uint8_t> bytes);

/// Encode as "P6\n<w> <h>\n255\n" + raw samples. read_ppm(write_ppm(v)) == v.
std::vector<std::uint8_t> write_ppm(const View& view);

View load_view(const std::filesystem::path& path);
void save_view(const View& view, const std::filesystem::path& path);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace lf
