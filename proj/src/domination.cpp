#include "fks/domination.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fks/errors.hpp"
#include "fks/multiplier.hpp"
#include "fks/norms.hpp"

namespace fks {

DominationReport symbol_domination_check(double alpha, double t, const Grid& g) {
    if (!(alpha >= 1.0 && alpha <= 2.0))
        throw ConfigError("diffusion exponent must lie in [1, 2]");
    if (!(t > 0.0))
        throw ConfigError("domination check needs t > 0");

    DominationReport rep;
    rep.alpha = alpha;
    rep.t = t;
    rep.rate = default_gevrey_rate(alpha, g.dim);
    rep.l1_l2_exact = true;
    rep.strict_half = g.dim > 1;

    const double factor = rep.rate * std::pow(t, 1.0 / alpha);
    const double dk = g.dk();
    for (std::size_t i = 0; i < g.size(); ++i) {
        int k[3] = {0, 0, 0};
        g.wavenumbers(i, k);
        const std::int64_t ksq = k_sq(k, g.dim);
        if (ksq == 0)
            continue;
        const std::int64_t l1 = k_l1(k, g.dim);
        // Cauchy-Schwarz on the lattice, exact in 64-bit integers
        if (l1 * l1 > static_cast<std::int64_t>(g.dim) * ksq)
            rep.l1_l2_exact = false;
        const double mag = std::sqrt(static_cast<double>(ksq)) * dk;
        const double weighted = factor * static_cast<double>(l1) * dk -
                                0.5 * t * std::pow(mag, alpha);
        if (std::exp(weighted) > rep.sup_value) {
            rep.sup_value = std::exp(weighted);
            rep.sup_at_magnitude = mag;
        }
        ++rep.lattice_checked;
        if (g.dim > 1 && !(static_cast<double>(l1) * dk / (2.0 * g.dim) < 0.5 * mag))
            rep.strict_half = false;
    }

    // interpolation exponent scan over a dense (s, t) sample
    const double inv_alpha = 1.0 / alpha;
    rep.interp_min = inf;
    const int samples = 4096;
    for (int i = 0; i <= samples; ++i) {
        const double s = t * static_cast<double>(i) / samples;
        const double e = std::pow(t - s, inv_alpha) + std::pow(s, inv_alpha) -
                         std::pow(t, inv_alpha);
        rep.interp_min = std::min(rep.interp_min, e);
    }
    const double at_zero = std::pow(t - 0.0, inv_alpha) + std::pow(0.0, inv_alpha) -
                           std::pow(t, inv_alpha);
    const double at_t = std::pow(t - t, inv_alpha) + std::pow(t, inv_alpha) -
                        std::pow(t, inv_alpha);
    rep.endpoints_exact = at_zero == 0.0 && at_t == 0.0;
    return rep;
}

} // namespace fks
