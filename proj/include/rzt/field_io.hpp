#pragma once

// RZF1 field files: 16-byte magic "RZFLD001" padded with NULs, then
// little-endian u32 dim, u32 points_per_axis, f64 half_width, then
// interleaved (re, im) f64 pairs in row-major order (axis 0 slowest).

#include <string>

#include "rzt/grid.hpp"

namespace rzt {

void write_field(const std::string& path, const Field& f);
Field read_field(const std::string& path);

/// Write via a temp file in the same directory, then rename.
void write_field_atomic(const std::string& path, const Field& f);

} // namespace rzt
