#pragma once

#include "fks/field.hpp"

namespace fks {

// Pointwise comparisons between the analyticity weight and half the
// dissipation, evaluated over the whole frequency lattice:
//   * sup of e^{rate t^(1/alpha)|xi|_1 - (t/2)|xi|^alpha}, rate the default
//     lift rate (1 for alpha > 1, 1/(2 dim) for alpha = 1) -- finite because
//     the dissipation wins at high frequency (alpha > 1) or because
//     (1/2n)|xi|_1 <= |xi|/(2 sqrt n) < |xi|/2 (alpha = 1, dim > 1);
//   * exact integer verification of |k|_1^2 <= dim * |k|^2 (the first
//     inequality above squared) on every nonzero lattice point;
//   * sample scan of the interpolation exponent
//     (t-s)^(1/alpha) + s^(1/alpha) - t^(1/alpha), which is nonnegative on
//     0 <= s <= t and vanishes identically at the endpoints.
struct DominationReport {
    double alpha = 2.0;
    double t = 1.0;
    double rate = 1.0;
    double sup_value = 0.0;       // sup of the weighted symbol over the lattice
    double sup_at_magnitude = 0.0; // |xi| where the sup is attained
    long long lattice_checked = 0;
    bool l1_l2_exact = false;     // |k|_1^2 <= dim |k|^2 held exactly everywhere
    bool strict_half = false;     // dim > 1: (1/2 dim)|xi|_1 < |xi|/2 everywhere
    double interp_min = 0.0;      // min of the interpolation exponent over the scan
    bool endpoints_exact = false; // exponent exactly 0 at s = 0 and s = t
};

DominationReport symbol_domination_check(double alpha, double t, const Grid& g);

} // namespace fks
