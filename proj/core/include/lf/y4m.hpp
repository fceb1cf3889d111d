#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lf/light_field.hpp"
#include "lf/scan.hpp"

namespace lf {

/// YUV4MPEG2 pseudo-sequence: header
/// "YUV4MPEG2 W<M> H<N> F25:1 Ip A1:1 C444\n", one FRAME per view in scan
/// order, planes Y,Cb,Cr (8-bit full-range BT.601).
std::vector<std::uint8_t> export_y4m(const LightField& lf, ScanOrder order);

/// Inverse with the same order; import(export(lf)) is within +-1 per sample.
/// Throws FormatError on header mismatch or frame count != K*L.
LightField import_y4m(std::span<const std::uint8_t> bytes, int grid_rows, int grid_cols,
                      ScanOrder order);

}  // namespace lf
