#include "lf/color.hpp"

namespace lf {

namespace {

// Forward matrix, BT.601 full range with the conventional 6-decimal chroma
// coefficients. Because those are rounded, the textbook 1.402/1.772 inverse
// is only approximate; the true matrix inverse is computed below so the
// round trip closes to machine precision.
constexpr double kFwd[3][3] = {{0.299, 0.587, 0.114},
                               {-0.168736, -0.331264, 0.5},
                               {0.5, -0.418688, -0.081312}};

struct InverseMatrix {
    double m[3][3];
    InverseMatrix() {
        const auto& a = kFwd;
        double det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                     a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                     a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                int i1 = (j + 1) % 3, i2 = (j + 2) % 3;  // transposed cofactor
                int j1 = (i + 1) % 3, j2 = (i + 2) % 3;
                m[i][j] = (a[i1][j1] * a[i2][j2] - a[i1][j2] * a[i2][j1]) / det;
            }
    }
};

const InverseMatrix kInv;

}  // namespace

void rgb_to_ycbcr(double r, double g, double b, double& y, double& cb, double& cr) {
    y = kFwd[0][0] * r + kFwd[0][1] * g + kFwd[0][2] * b;
    cb = 128.0 + kFwd[1][0] * r + kFwd[1][1] * g + kFwd[1][2] * b;
    cr = 128.0 + kFwd[2][0] * r + kFwd[2][1] * g + kFwd[2][2] * b;
}

void ycbcr_to_rgb(double y, double cb, double cr, double& r, double& g, double& b) {
    double u = cb - 128.0, v = cr - 128.0;
    r = kInv.m[0][0] * y + kInv.m[0][1] * u + kInv.m[0][2] * v;
    g = kInv.m[1][0] * y + kInv.m[1][1] * u + kInv.m[1][2] * v;
    b = kInv.m[2][0] * y + kInv.m[2][1] * u + kInv.m[2][2] * v;
}

void color_transform(PlanarField& pf, ColorDirection direction) {
    std::vector<double>& c0 = pf.channels[0];
    std::vector<double>& c1 = pf.channels[1];
    std::vector<double>& c2 = pf.channels[2];
    const std::size_t n = c0.size();
    if (direction == ColorDirection::Forward) {
        for (std::size_t i = 0; i < n; ++i) {
            double y, cb, cr;
            rgb_to_ycbcr(c0[i], c1[i], c2[i], y, cb, cr);
            c0[i] = y;
            c1[i] = cb;
            c2[i] = cr;
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            double r, g, b;
            ycbcr_to_rgb(c0[i], c1[i], c2[i], r, g, b);
            c0[i] = r;
            c1[i] = g;
            c2[i] = b;
        }
    }
}

}  // namespace lf
