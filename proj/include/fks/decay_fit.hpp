#pragma once

#include <span>

namespace fks {

// least squares y = slope * x + intercept
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual_rms = 0.0;
};

LineFit linear_fit(std::span<const double> x, std::span<const double> y);

// Power-law fit value ~ C * t^exponent over the samples with t inside
// [window_lo, window_hi], via least squares on (log t, log value).
// Requires at least 8 usable samples spanning at least one decade and
// strictly positive values.
struct DecayFit {
    double exponent = 0.0;
    double amplitude_log = 0.0; // log C
    double residual_rms = 0.0;
    int samples_used = 0;
};

DecayFit decay_fit(std::span<const double> times, std::span<const double> values,
                   double window_lo, double window_hi);

} // namespace fks
