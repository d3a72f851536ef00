#include "fks/decay_fit.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "fks/errors.hpp"

namespace fks {

LineFit linear_fit(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw ConfigError("linear_fit needs matching inputs with >= 2 points");
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw NumericalError("linear_fit: degenerate abscissae");
    LineFit fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    double rss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double e = y[i] - (fit.slope * x[i] + fit.intercept);
        rss += e * e;
    }
    fit.residual_rms = std::sqrt(rss / n);
    return fit;
}

DecayFit decay_fit(std::span<const double> times, std::span<const double> values,
                   double window_lo, double window_hi) {
    if (times.size() != values.size())
        throw ConfigError("decay_fit needs matching time/value arrays");
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (times[i] < window_lo || times[i] > window_hi) continue;
        if (!(times[i] > 0.0))
            throw ConfigError("decay_fit needs strictly positive times in the window");
        if (!(values[i] > 0.0))
            throw NumericalError("decay_fit: nonpositive value at t = " +
                                 std::to_string(times[i]));
        lx.push_back(std::log(times[i]));
        ly.push_back(std::log(values[i]));
    }
    if (lx.size() < 8)
        throw NumericalError("decay_fit: fewer than 8 samples inside the window");
    double lo = lx.front(), hi = lx.front();
    for (double v : lx) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (hi - lo < std::log(10.0) * 0.8)
        throw NumericalError("decay_fit: samples span less than 0.8 decades");
    LineFit fit = linear_fit(lx, ly);
    DecayFit out;
    out.exponent = fit.slope;
    out.amplitude_log = fit.intercept;
    out.residual_rms = fit.residual_rms;
    out.samples_used = static_cast<int>(lx.size());
    return out;
}

} // namespace fks
