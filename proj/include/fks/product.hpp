#pragma once

#include "fks/field.hpp"

namespace fks {

// Largest retained |k_i| per axis under the 2/3-style dealiasing rule.
// With K = floor((points-1)/3) every aliased image of a product of retained
// modes lands outside the retained band, so products of masked fields are
// exact convolutions on the retained modes.
int dealias_cutoff_index(const Grid& g);

// cutoff in physical frequency units, dealias_cutoff_index * dk
double dealias_cutoff_frequency(const Grid& g);

// zero every coefficient with any |k_i| above the cutoff
void apply_dealias_mask(SpectralField& f);

// Pointwise product computed through physical space with the dealias mask
// applied to both inputs and to the result.
SpectralField pointwise_product_dealiased(const SpectralField& a, const SpectralField& b);

// Alias-free product via zero padding onto a grid with twice the points per
// axis, truncated back to the original band.  Exact whenever the result fits
// in the original band; used as an independent reference path.
SpectralField pointwise_product_padded(const SpectralField& a, const SpectralField& b);

namespace serial {
SpectralField pointwise_product_dealiased(const SpectralField& a, const SpectralField& b);
} // namespace serial

} // namespace fks
