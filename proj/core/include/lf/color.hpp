#pragma once

#include "lf/light_field.hpp"

namespace lf {

enum class ColorDirection { Forward, Inverse };

/// BT.601 full-range RGB <-> YCbCr on planar data, real arithmetic.
/// Forward:  Y  =  0.299 R + 0.587 G + 0.114 B
///           Cb = 128 - 0.168736 R - 0.331264 G + 0.5 B
///           Cr = 128 + 0.5 R - 0.418688 G - 0.081312 B
/// Inverse is the exact algebraic inverse.
void color_transform(PlanarField& pf, ColorDirection direction);

/// Single-pixel versions used by the Y4M exporter.
void rgb_to_ycbcr(double r, double g, double b, double& y, double& cb, double& cr);
void ycbcr_to_rgb(double y, double cb, double cr, double& r, double& g, double& b);

}  // namespace lf
