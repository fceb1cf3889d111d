#include "lf/y4m.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "lf/color.hpp"
#include "lf/error.hpp"

namespace lf {

namespace {

std::uint8_t to_u8(double v) {
    double r = std::round(v);  // half away from zero
    r = r < 0.0 ? 0.0 : (r > 255.0 ? 255.0 : r);
    return static_cast<std::uint8_t>(r);
}

std::string read_line(std::span<const std::uint8_t> bytes, std::size_t& pos) {
    std::string line;
    while (pos < bytes.size() && bytes[pos] != '\n') line.push_back(static_cast<char>(bytes[pos++]));
    if (pos >= bytes.size())
        throw FormatError("y4m: unterminated header line");
    ++pos;  // consume '\n'
    return line;
}

}  // namespace

std::vector<std::uint8_t> export_y4m(const LightField& lf, ScanOrder order) {
    const int w = lf.width(), h = lf.height();
    const std::size_t plane = static_cast<std::size_t>(w) * h;

    char header[96];
    int n = std::snprintf(header, sizeof header, "YUV4MPEG2 W%d H%d F25:1 Ip A1:1 C444\n", w, h);

    std::vector<std::uint8_t> out(header, header + n);
    out.reserve(out.size() + lf.views.size() * (6 + 3 * plane));

    for (auto [row, col] : scan_sequence(lf.grid_rows, lf.grid_cols, order)) {
        const View& v = lf.view(row, col);
        const char* frame = "FRAME\n";
        out.insert(out.end(), frame, frame + 6);
        std::size_t base = out.size();
        out.resize(base + 3 * plane);
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x) {
                double yy, cb, cr;
                rgb_to_ycbcr(v.at(x, y, 0), v.at(x, y, 1), v.at(x, y, 2), yy, cb, cr);
                std::size_t i = static_cast<std::size_t>(y) * w + x;
                out[base + i] = to_u8(yy);
                out[base + plane + i] = to_u8(cb);
                out[base + 2 * plane + i] = to_u8(cr);
            }
    }
    return out;
}

LightField import_y4m(std::span<const std::uint8_t> bytes, int grid_rows, int grid_cols,
                      ScanOrder order) {
    if (grid_rows < 1 || grid_cols < 1)
        throw ParamError("y4m import: grid dimensions must be >= 1");

    std::size_t pos = 0;
    std::string header = read_line(bytes, pos);
    if (header.rfind("YUV4MPEG2", 0) != 0)
        throw FormatError("y4m: bad signature");

    int w = 0, h = 0;
    bool c444 = true;  // C parameter is optional; default in the wild is 4:2:0 but we require 444 when present
    std::size_t t = 9;
    while (t < header.size()) {
        while (t < header.size() && header[t] == ' ') ++t;
        if (t >= header.size()) break;
        std::size_t end = header.find(' ', t);
        if (end == std::string::npos) end = header.size();
        std::string param = header.substr(t, end - t);
        t = end;
        switch (param[0]) {
            case 'W': w = std::stoi(param.substr(1)); break;
            case 'H': h = std::stoi(param.substr(1)); break;
            case 'C': c444 = param.substr(1, 3) == "444"; break;
            default: break;  // F, I, A, X: irrelevant for pseudo-sequences
        }
    }
    if (w < 1 || h < 1)
        throw FormatError("y4m: missing or invalid W/H in header");
    if (!c444)
        throw FormatError("y4m: only C444 streams are supported");

    const std::size_t plane = static_cast<std::size_t>(w) * h;
    auto seq = scan_sequence(grid_rows, grid_cols, order);

    LightField lf;
    lf.grid_rows = grid_rows;
    lf.grid_cols = grid_cols;
    lf.views.assign(seq.size(), make_view(w, h));

    std::size_t frame_count = 0;
    for (auto [row, col] : seq) {
        if (pos >= bytes.size())
            throw FormatError("y4m: expected " + std::to_string(seq.size()) + " frames, found " +
                              std::to_string(frame_count));
        std::string marker = read_line(bytes, pos);
        if (marker.rfind("FRAME", 0) != 0)
            throw FormatError("y4m: missing FRAME marker before frame " +
                              std::to_string(frame_count));
        if (bytes.size() - pos < 3 * plane)
            throw FormatError("y4m: truncated frame " + std::to_string(frame_count));
        View& v = lf.view(row, col);
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x) {
                std::size_t i = static_cast<std::size_t>(y) * w + x;
                double r, g, b;
                ycbcr_to_rgb(bytes[pos + i], bytes[pos + plane + i], bytes[pos + 2 * plane + i],
                             r, g, b);
                v.at(x, y, 0) = to_u8(r);
                v.at(x, y, 1) = to_u8(g);
                v.at(x, y, 2) = to_u8(b);
            }
        pos += 3 * plane;
        ++frame_count;
    }
    if (pos != bytes.size())
        throw FormatError("y4m: trailing data after " + std::to_string(frame_count) +
                          " frames (frame count != grid size?)");
    return lf;
}

}  // namespace lf
