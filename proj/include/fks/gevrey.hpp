#pragma once

#include <vector>

#include "fks/field.hpp"

namespace fks {

// Coefficientwise multiplication by e^{rate * t^(1/alpha) * |xi|_1}.  Once the
// peak amplification on the lattice exceeds 1e12 the product is evaluated in
// exponent space (the weight is added to log|coef| before a single exp), so
// large weights never overflow prematurely: the result is finite whenever the
// true product is representable.
SpectralField gevrey_lift(const SpectralField& u, double t, double alpha, double rate);

// Log-amplitude view of the same lift: per-mode log|coef| + weight with unit
// phases kept separately.  Norms and radius fits can be taken entirely from
// the logs; log_mag is -inf where the coefficient vanishes.
struct LogLiftedField {
    Grid grid;
    std::vector<double> log_mag;
    std::vector<cplx> phase;
};

LogLiftedField gevrey_log_lift(const SpectralField& u, double t, double alpha, double rate);

struct RadiusFit {
    double radius = 0.0;    // exponential decay rate of shell maxima in |xi|_1
    double intercept = 0.0; // fitted log-amplitude at |xi|_1 = 0
    double residual = 0.0;  // rms residual of the linear fit
    int shells_used = 0;
    double window_lo = 0.0; // physical |xi|_1 range actually fitted
    double window_hi = 0.0;
};

// Analyticity radius read off the spectrum: least-squares slope of
// -log A(s) against physical |xi|_1, where A(s) is the maximum coefficient
// magnitude over the lattice shell |k|_1 = s.  Only shells with A(s) inside
// [1e-12, 1e-2] x peak enter the fit; fewer than 5 such shells is an error.
RadiusFit analyticity_radius(const SpectralField& u);

// row of the radius-study table: fitted radius against the predicted growth
struct GevreyStudyRow {
    double t = 0.0;
    double fitted_radius = 0.0;
    double predicted_radius = 0.0; // rate * t^(1/alpha)
    double residual = 0.0;
};

} // namespace fks
