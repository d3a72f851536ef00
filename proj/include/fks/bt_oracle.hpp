#pragma once

#include "fks/field.hpp"

namespace fks {

// Brute-force evaluation of the twisted product
//   (f, g) -> sum over lattice pairs (xi, eta) of
//       e^{t^(1/alpha) (|xi+eta|_1 - |xi|_1 - |eta|_1)} f^(xi) g^(eta)
// at output frequency xi + eta.  Contributions leaving the resolved lattice
// are dropped, matching the truncation of the exact padded grid product, so
// the t = 0 case reduces to the plain product.  The exponent is never
// positive: |.|_1 is subadditive, which is also checkable in exact integer
// arithmetic on the lattice.
struct BtResult {
    SpectralField value;
    double ratio = 0.0; // ||result||_p / (||f||_p1 ||g||_p2)
    double p = 1.0, p1 = 2.0, p2 = 2.0;
};

// guarded to grids with at most 4096 total modes (quadratic pair sum)
BtResult bt_apply(const SpectralField& f, const SpectralField& g, double t, double alpha,
                  double p = 1.0, double p1 = 2.0, double p2 = 2.0);

// exact integer check of |k + l|_1 <= |k|_1 + |l|_1 over every lattice pair
// of the grid (same size guard); returns the number of pairs checked
long long bt_exponent_nonpositive_pairs(const Grid& g);

} // namespace fks
