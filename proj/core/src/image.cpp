#include "lf/image.hpp"

#include <cstdio>
#include <fstream>
#include <string>

#include "lf/error.hpp"

namespace lf {

namespace {

// PPM header tokenizer: whitespace separates tokens, '#' starts a comment
// running to end of line.
class HeaderScanner {
public:
    explicit HeaderScanner(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::string next_token(const char* field) {
        skip_separators();
        std::string tok;
        while (pos_ < bytes_.size() && !is_space(bytes_[pos_]) && bytes_[pos_] != '#')
            tok.push_back(static_cast<char>(bytes_[pos_++]));
        if (tok.empty())
            throw FormatError(std::string("ppm: missing ") + field);
        return tok;
    }

    int next_int(const char* field) {
        std::string tok = next_token(field);
        int value = 0;
        for (char ch : tok) {
            if (ch < '0' || ch > '9')
                throw FormatError(std::string("ppm: non-numeric ") + field + " '" + tok + "'");
            value = value * 10 + (ch - '0');
            if (value > 1 << 24)
                throw FormatError(std::string("ppm: ") + field + " out of range");
        }
        return value;
    }

    // After maxval exactly one whitespace byte precedes the raster.
    std::size_t raster_offset() {
        if (pos_ >= bytes_.size() || !is_space(bytes_[pos_]))
            throw FormatError("ppm: missing whitespace before raster");
        return pos_ + 1;
    }

private:
    static bool is_space(std::uint8_t c) {
        return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
    }
    void skip_separators() {
        while (pos_ < bytes_.size()) {
            if (is_space(bytes_[pos_])) {
                ++pos_;
            } else if (bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

View make_view(int width, int height, std::uint8_t fill) {
    View v;
    v.width = width;
    v.height = height;
    v.samples.assign(static_cast<std::size_t>(width) * height * 3, fill);
    return v;
}

View read_ppm(std::span<const std::uint8_t> bytes) {
    HeaderScanner scanner(bytes);
    std::string magic = scanner.next_token("magic");
    if (magic != "P6")
        throw FormatError("ppm: bad magic '" + magic + "', expected P6");
    View v;
    v.width = scanner.next_int("width");
    v.height = scanner.next_int("height");
    if (v.width < 1 || v.height < 1)
        throw FormatError("ppm: dimensions must be positive");
    int maxval = scanner.next_int("maxval");
    if (maxval != 255)
        throw FormatError("ppm: unsupported maxval " + std::to_string(maxval) + ", expected 255");
    std::size_t offset = scanner.raster_offset();
    std::size_t need = static_cast<std::size_t>(v.width) * v.height * 3;
    if (bytes.size() - offset < need)
        throw FormatError("ppm: truncated payload, need " + std::to_string(need) + " bytes, have " +
                          std::to_string(bytes.size() - offset));
    v.samples.assign(bytes.begin() + offset, bytes.begin() + offset + need);
    return v;
}

std::vector<std::uint8_t> write_ppm(const View& view) {
    char header[64];
    int n = std::snprintf(header, sizeof header, "P6\n%d %d\n255\n", view.width, view.height);
    std::vector<std::uint8_t> out(header, header + n);
    out.insert(out.end(), view.samples.begin(), view.samples.end());
    return out;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FormatError("cannot open file: " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw FormatError("cannot open file for writing: " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw FormatError("write failed: " + path.string());
}

View load_view(const std::filesystem::path& path) {
    return read_ppm(read_file(path));
}

void save_view(const View& view, const std::filesystem::path& path) {
    write_file(path, write_ppm(view));
}

}  // namespace lf
