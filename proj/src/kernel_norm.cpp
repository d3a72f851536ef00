#include "fks/kernel_norm.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "fks/errors.hpp"
#include "fks/transform.hpp"

namespace fks {

namespace {

// quadrature of |kernel| where kernel = sum over the lattice of
// (symbol(xi) / period^dim) e^{i xi . x}; sampling the free-space symbol on
// the lattice periodizes the free-space kernel exactly.
double kernel_quadrature(double sigma, double a, int dim, int points, double period) {
    Grid g = make_grid(dim, points, period);
    const double volume = std::pow(period, dim);
    SpectralField f(g);
    const double dk = g.dk();
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(g.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        int k[3] = {0, 0, 0};
        g.wavenumbers(static_cast<std::size_t>(i), k);
        const double mag = std::sqrt(static_cast<double>(k_sq(k, dim))) * dk;
        const double l1 = static_cast<double>(k_l1(k, dim)) * dk;
        const double symbol = (sigma == 0.0 ? 1.0 : std::pow(mag, sigma)) * std::exp(-a * l1);
        f.coef[static_cast<std::size_t>(i)] = symbol / volume;
    }
    std::vector<double> phys = transform_inverse(f);
    double sum = 0.0;
    for (double v : phys)
        sum += std::abs(v);
    return sum * cell_volume(g);
}

} // namespace

KernelNormEstimate kernel_l1_norm(double sigma, double alpha, double theta, double t,
                                  int dim, int points, double period) {
    if (sigma < 0.0)
        throw ConfigError("derivative order must be nonnegative, got " + std::to_string(sigma));
    if (!(alpha >= 1.0 && alpha <= 2.0))
        throw ConfigError("diffusion exponent must lie in [1, 2]");
    if (!(theta > 0.0) || !(t > 0.0))
        throw ConfigError("kernel norm needs positive rate and time");
    if (points < 16 || points % 2 != 0)
        throw ConfigError("quadrature needs an even point count of at least 16");
    if (period == 0.0)
        period = 120.0;

    KernelNormEstimate est;
    est.sigma = sigma;
    est.alpha = alpha;
    est.theta = theta;
    est.t = t;
    est.points = points;
    est.period = period;

    const double a = theta * std::pow(t, 1.0 / alpha);
    est.value = kernel_quadrature(sigma, a, dim, points, period);
    est.coarse_value = kernel_quadrature(sigma, a, dim, points / 2, period);
    est.rescaled = est.value * std::pow(t, sigma / alpha);
    est.resolved = std::abs(est.value - est.coarse_value) <= 0.02 * std::abs(est.value);
    return est;
}

} // namespace fks
