#pragma once

#include <string>

#include "fks/field.hpp"

namespace fks {

// Binary field container, stable across versions:
//   bytes 0..3   magic "FKSF"
//   u32          format version (currently 1)
//   u32          dim
//   u32          points per axis
//   f64          period
//   2 * size f64 coefficient array, row major (axis 0 slowest),
//                real part then imaginary part per mode
// All integers and doubles are little-endian.
void write_snapshot(const std::string& path, const SpectralField& f);
SpectralField read_snapshot(const std::string& path);

} // namespace fks
