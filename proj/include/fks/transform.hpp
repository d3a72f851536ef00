#pragma once

#include <span>
#include <vector>

#include "fks/field.hpp"

namespace fks {

// Forward transform of point samples (row-major, axis 0 slowest) into
// coefficients normalized so that coef[0] is the spatial mean.
SpectralField transform_forward(std::span<const double> values, const Grid& g);
SpectralField transform_forward(std::span<const cplx> values, const Grid& g);

// Inverse transform back to point samples.  The real-valued variant returns
// the real part; callers working with genuinely complex signals use the
// complex variant.
std::vector<double> transform_inverse(const SpectralField& f);
std::vector<cplx> transform_inverse_complex(const SpectralField& f);

} // namespace fks
