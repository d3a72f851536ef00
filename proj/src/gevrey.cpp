#include "fks/gevrey.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fks/decay_fit.hpp"
#include "fks/errors.hpp"
#include "fks/multiplier.hpp"
#include "fks/norms.hpp"

namespace fks {

namespace {

// peak lattice weight rate * t^(1/alpha) * max |xi|_1
double peak_exponent(const Grid& g, double t, double alpha, double rate) {
    if (t < 0.0)
        throw ConfigError("Gevrey lift requires t >= 0, got " + std::to_string(t));
    // axis 0 extreme is -N/2; the l1 peak is attained at (-N/2, ..., -N/2)
    return rate * std::pow(t, 1.0 / alpha) * g.dk() * (g.points / 2) * g.dim;
}

} // namespace

SpectralField gevrey_lift(const SpectralField& u, double t, double alpha, double rate) {
    const Grid& g = u.grid;
    SpectralField out(g);
    const double factor = rate * std::pow(t, 1.0 / alpha);
    const double dk = g.dk();
    const bool exponent_space = peak_exponent(g, t, alpha, rate) > std::log(1e12);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(g.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        int k[3] = {0, 0, 0};
        g.wavenumbers(static_cast<std::size_t>(i), k);
        const double w = factor * static_cast<double>(k_l1(k, g.dim)) * dk;
        const cplx c = u.coef[static_cast<std::size_t>(i)];
        if (!exponent_space) {
            out.coef[static_cast<std::size_t>(i)] = c * std::exp(w);
            continue;
        }
        const double mag = std::abs(c);
        if (mag == 0.0) {
            out.coef[static_cast<std::size_t>(i)] = 0.0;
        } else {
            const double lifted = std::exp(w + std::log(mag));
            out.coef[static_cast<std::size_t>(i)] = (c / mag) * lifted;
        }
    }
    return out;
}

LogLiftedField gevrey_log_lift(const SpectralField& u, double t, double alpha, double rate) {
    const Grid& g = u.grid;
    peak_exponent(g, t, alpha, rate); // validates t
    LogLiftedField out;
    out.grid = g;
    out.log_mag.resize(g.size());
    out.phase.resize(g.size());
    const double factor = rate * std::pow(t, 1.0 / alpha);
    const double dk = g.dk();
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(g.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        int k[3] = {0, 0, 0};
        g.wavenumbers(static_cast<std::size_t>(i), k);
        const double w = factor * static_cast<double>(k_l1(k, g.dim)) * dk;
        const cplx c = u.coef[static_cast<std::size_t>(i)];
        const double mag = std::abs(c);
        if (mag == 0.0) {
            out.log_mag[static_cast<std::size_t>(i)] = -inf;
            out.phase[static_cast<std::size_t>(i)] = 1.0;
        } else {
            out.log_mag[static_cast<std::size_t>(i)] = std::log(mag) + w;
            out.phase[static_cast<std::size_t>(i)] = c / mag;
        }
    }
    return out;
}

RadiusFit analyticity_radius(const SpectralField& u) {
    const Grid& g = u.grid;
    const int max_s = (g.points / 2) * g.dim;
    std::vector<double> shell_max(static_cast<std::size_t>(max_s) + 1, 0.0);
    for (std::size_t i = 0; i < g.size(); ++i) {
        int k[3] = {0, 0, 0};
        g.wavenumbers(i, k);
        const auto s = static_cast<std::size_t>(k_l1(k, g.dim));
        shell_max[s] = std::max(shell_max[s], std::abs(u.coef[i]));
    }
    double peak = 0.0;
    for (int s = 1; s <= max_s; ++s)
        peak = std::max(peak, shell_max[static_cast<std::size_t>(s)]);
    if (peak <= 0.0)
        throw NumericalError("radius fit needs a nonzero spectrum away from the mean");
    const double lo = 1e-12 * peak;
    const double hi = 1e-2 * peak;
    std::vector<double> xs;
    std::vector<double> ys;
    const double dk = g.dk();
    for (int s = 1; s <= max_s; ++s) {
        const double a = shell_max[static_cast<std::size_t>(s)];
        if (a >= lo && a <= hi) {
            xs.push_back(dk * s);
            ys.push_back(-std::log(a));
        }
    }
    if (xs.size() < 5)
        throw NumericalError("radius fit window covers only " + std::to_string(xs.size()) +
                             " shells; at least 5 are required");
    LineFit line = linear_fit(xs, ys);
    RadiusFit fit;
    fit.radius = line.slope;
    fit.intercept = -line.intercept;
    fit.residual = line.residual_rms;
    fit.shells_used = static_cast<int>(xs.size());
    fit.window_lo = xs.front();
    fit.window_hi = xs.back();
    return fit;
}

} // namespace fks
