#pragma once

#include "fks/field.hpp"

namespace fks {

// L^1 size of the physical-space kernel of the multiplier
// |xi|^sigma e^{-theta t^(1/alpha) |xi|_1}, measured by quadrature on a large
// periodic box standing in for free space.  The rescaled column removes the
// predicted self-similar time dependence: rescaled = value * t^(sigma/alpha)
// should be a constant of (sigma, theta) alone.
struct KernelNormEstimate {
    double sigma = 0.0;
    double alpha = 2.0;
    double theta = 1.0;
    double t = 1.0;
    double value = 0.0;
    double rescaled = 0.0;
    int points = 0;          // quadrature points per axis
    double period = 0.0;     // box side
    double coarse_value = 0.0; // same box at half the points
    bool resolved = true;    // |value - coarse_value| <= 2% of value
};

// dim in {1,2,3}; points even and >= 16; period 0 selects a box wide enough
// for the slowly decaying kernel tails (120 for the default settings).
KernelNormEstimate kernel_l1_norm(double sigma, double alpha, double theta, double t,
                                  int dim = 2, int points = 1024, double period = 0.0);

} // namespace fks
