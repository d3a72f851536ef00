#pragma once

#include "fks/filter_bank.hpp"

namespace fks {

// Bony splitting of a pointwise product:
//   f g = T_f g + T_g f + R(f, g) + mean(f) mean(g)
// with T_f g the sum over j of low_pass(f, j-1) * Delta_j g and R the sum of
// block products with |j - j'| <= 1.  For mean-zero band-limited inputs the
// three parts reconstruct the dealiased product exactly.
struct ParaproductParts {
    SpectralField low_high; // T_f g
    SpectralField high_low; // T_g f
    SpectralField resonant; // R(f, g)
};

ParaproductParts paraproduct(const SpectralField& f, const SpectralField& g,
                             const DyadicFilterBank& bank);

} // namespace fks
