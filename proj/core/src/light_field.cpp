#include "lf/light_field.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include <json.hpp>

#include "lf/error.hpp"

namespace lf {

namespace {

int require_int(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw FormatError(std::string("manifest: missing or non-integer key '") + key + "'");
    return j[key].get<int>();
}

double require_number(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number())
        throw FormatError(std::string("manifest: missing or non-numeric key '") + key + "'");
    return j[key].get<double>();
}

std::string require_string(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string())
        throw FormatError(std::string("manifest: missing or non-string key '") + key + "'");
    return j[key].get<std::string>();
}

std::string format_index(int value, int pad) {
    std::string s = std::to_string(value);
    while (static_cast<int>(s.size()) < pad) s.insert(s.begin(), '0');
    return s;
}

}  // namespace

Manifest parse_manifest(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("manifest: invalid JSON: ") + e.what());
    }
    Manifest m;
    m.name = require_string(j, "name");
    m.grid_rows = require_int(j, "grid_rows");
    m.grid_cols = require_int(j, "grid_cols");
    m.width = require_int(j, "width");
    m.height = require_int(j, "height");
    m.file_pattern = require_string(j, "file_pattern");
    m.disparity_min = require_number(j, "disparity_min");
    m.disparity_max = require_number(j, "disparity_max");
    if (m.grid_rows < 1 || m.grid_cols < 1 || m.width < 1 || m.height < 1)
        throw FormatError("manifest: grid and view dimensions must be positive");
    if (m.disparity_min > m.disparity_max)
        throw FormatError("manifest: disparity_min > disparity_max");
    return m;
}

Manifest read_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw LoadError("cannot open manifest: " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_manifest(text);
}

std::string manifest_to_json(const Manifest& m) {
    nlohmann::json j;
    j["name"] = m.name;
    j["grid_rows"] = m.grid_rows;
    j["grid_cols"] = m.grid_cols;
    j["width"] = m.width;
    j["height"] = m.height;
    j["file_pattern"] = m.file_pattern;
    j["disparity_min"] = m.disparity_min;
    j["disparity_max"] = m.disparity_max;
    return j.dump(2) + "\n";
}

std::string expand_pattern(const std::string& pattern, int row, int col) {
    std::string out;
    std::size_t i = 0;
    bool saw_row = false, saw_col = false;
    while (i < pattern.size()) {
        if (pattern[i] != '{') {
            out.push_back(pattern[i++]);
            continue;
        }
        std::size_t close = pattern.find('}', i);
        if (close == std::string::npos)
            throw FormatError("file_pattern: unclosed '{' in '" + pattern + "'");
        std::string spec = pattern.substr(i + 1, close - i - 1);
        std::string key = spec;
        int pad = 0;
        if (auto colon = spec.find(':'); colon != std::string::npos) {
            key = spec.substr(0, colon);
            std::string padspec = spec.substr(colon + 1);
            // only zero-padded decimal widths ("02") are understood
            if (padspec.size() < 2 || padspec[0] != '0')
                throw FormatError("file_pattern: unsupported format spec '{" + spec + "}'");
            for (std::size_t p = 1; p < padspec.size(); ++p) {
                if (padspec[p] < '0' || padspec[p] > '9')
                    throw FormatError("file_pattern: unsupported format spec '{" + spec + "}'");
                pad = pad * 10 + (padspec[p] - '0');
            }
        }
        if (key == "row") {
            out += format_index(row, pad);
            saw_row = true;
        } else if (key == "col") {
            out += format_index(col, pad);
            saw_col = true;
        } else {
            throw FormatError("file_pattern: unknown placeholder '{" + spec + "}'");
        }
        i = close + 1;
    }
    if (!saw_row || !saw_col)
        throw FormatError("file_pattern must contain both {row} and {col}: '" + pattern + "'");
    return out;
}

LightField load_light_field(const std::filesystem::path& manifest_path) {
    Manifest m = read_manifest(manifest_path);
    std::filesystem::path base = manifest_path.parent_path();

    std::set<std::string> seen;
    LightField lf;
    lf.grid_rows = m.grid_rows;
    lf.grid_cols = m.grid_cols;
    lf.disparity_min = m.disparity_min;
    lf.disparity_max = m.disparity_max;
    lf.views.reserve(static_cast<std::size_t>(m.grid_rows) * m.grid_cols);

    for (int r = 0; r < m.grid_rows; ++r) {
        for (int c = 0; c < m.grid_cols; ++c) {
            std::string rel = expand_pattern(m.file_pattern, r, c);
            auto coord = " for view (" + std::to_string(r) + "," + std::to_string(c) + ")";
            if (!seen.insert(rel).second)
                throw LoadError("file_pattern collision on '" + rel + "'" + coord);
            std::filesystem::path p = base / rel;
            if (!std::filesystem::exists(p))
                throw LoadError("missing view file '" + p.string() + "'" + coord);
            View v;
            try {
                v = load_view(p);
            } catch (const FormatError& e) {
                throw LoadError(std::string(e.what()) + coord);
            }
            if (v.width != m.width || v.height != m.height)
                throw LoadError("view dimensions " + std::to_string(v.width) + "x" +
                                std::to_string(v.height) + " do not match manifest " +
                                std::to_string(m.width) + "x" + std::to_string(m.height) + coord);
            lf.views.push_back(std::move(v));
        }
    }
    return lf;
}

void save_light_field(const LightField& lf, const std::filesystem::path& dir,
                      const std::string& name) {
    std::filesystem::create_directories(dir);
    Manifest m;
    m.name = name;
    m.grid_rows = lf.grid_rows;
    m.grid_cols = lf.grid_cols;
    m.width = lf.width();
    m.height = lf.height();
    m.file_pattern = name + "_r{row:02}_c{col:02}.ppm";
    m.disparity_min = lf.disparity_min;
    m.disparity_max = lf.disparity_max;
    for (int r = 0; r < lf.grid_rows; ++r)
        for (int c = 0; c < lf.grid_cols; ++c)
            save_view(lf.view(r, c), dir / expand_pattern(m.file_pattern, r, c));
    std::string json = manifest_to_json(m);
    write_file(dir / "manifest.json",
               std::span(reinterpret_cast<const std::uint8_t*>(json.data()), json.size()));
}

PlanarField to_planar(const LightField& lf) {
    PlanarField pf;
    pf.grid_rows = lf.grid_rows;
    pf.grid_cols = lf.grid_cols;
    pf.width = lf.width();
    pf.height = lf.height();
    pf.disparity_min = lf.disparity_min;
    pf.disparity_max = lf.disparity_max;
    for (auto& plane : pf.channels) plane.resize(pf.plane_size());
    for (int k = 0; k < pf.grid_rows; ++k)
        for (int l = 0; l < pf.grid_cols; ++l) {
            const View& v = lf.view(k, l);
            for (int m = 0; m < pf.width; ++m)
                for (int n = 0; n < pf.height; ++n) {
                    std::size_t idx = pf.index(k, l, m, n);
                    for (int c = 0; c < 3; ++c)
                        pf.channels[c][idx] = static_cast<double>(v.at(m, n, c));
                }
        }
    return pf;
}

LightField from_planar(const PlanarField& pf) {
    LightField lf;
    lf.grid_rows = pf.grid_rows;
    lf.grid_cols = pf.grid_cols;
    lf.disparity_min = pf.disparity_min;
    lf.disparity_max = pf.disparity_max;
    lf.views.reserve(static_cast<std::size_t>(pf.grid_rows) * pf.grid_cols);
    for (int k = 0; k < pf.grid_rows; ++k)
        for (int l = 0; l < pf.grid_cols; ++l) {
            View v = make_view(pf.width, pf.height);
            for (int m = 0; m < pf.width; ++m)
                for (int n = 0; n < pf.height; ++n) {
                    std::size_t idx = pf.index(k, l, m, n);
                    for (int c = 0; c < 3; ++c) {
                        double x = pf.channels[c][idx];
                        if (!std::isfinite(x))
                            throw NumericError("non-finite sample at view (" + std::to_string(k) +
                                               "," + std::to_string(l) + ") pixel (" +
                                               std::to_string(m) + "," + std::to_string(n) + ")");
                        double r = std::round(x);  // half away from zero
                        r = r < 0.0 ? 0.0 : (r > 255.0 ? 255.0 : r);
                        v.at(m, n, c) = static_cast<std::uint8_t>(r);
                    }
                }
            lf.views.push_back(std::move(v));
        }
    return lf;
}

}  // namespace lf
