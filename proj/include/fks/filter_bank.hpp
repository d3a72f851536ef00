#pragma once

#include <vector>

#include "fks/field.hpp"

namespace fks {

// Radial profiles of the dyadic partition.  chi is 1 for r <= 3/4, 0 for
// r >= 4/3 and a C^2 smoothstep in between; phi(r) = chi(r/2) - chi(r) is
// supported on the shell 3/4 <= r <= 8/3 and the dilates phi(2^-j r) sum to 1
// for every r > 0.
double lowpass_profile(double r);
double shell_profile(double r);

// Tabulated shell weights phi(2^-j |xi|) for every j whose shell meets the
// nonzero frequency lattice of the grid.  The retained j are contiguous and,
// because they cover all shells touching the lattice, the stored weights sum
// to 1 at every nonzero lattice point.
struct DyadicFilterBank {
    Grid grid;
    int j_min = 0;
    int j_max = -1;
    std::vector<std::vector<double>> weights; // [j - j_min][flat index]

    bool in_range(int j) const { return j >= j_min && j <= j_max; }
    const std::vector<double>& shell_weights(int j) const {
        return weights[static_cast<std::size_t>(j - j_min)];
    }
};

DyadicFilterBank build_filter_bank(const Grid& g);

// frequency-shell projection: multiply by phi(2^-j xi)
SpectralField dyadic_block(const SpectralField& f, int j, const DyadicFilterBank& bank);

// low-frequency cut: multiply by chi(2^-j xi).  Equals the sum of all dyadic
// blocks below j plus the lattice mean (the zero mode), which no shell holds.
SpectralField low_pass(const SpectralField& f, int j, const DyadicFilterBank& bank);

namespace serial {
SpectralField dyadic_block(const SpectralField& f, int j, const DyadicFilterBank& bank);
} // namespace serial

} // namespace fks
