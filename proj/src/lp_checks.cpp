#include "fks/lp_checks.hpp"

#include <cmath>
#include <vector>

#include "fks/decay_fit.hpp"
#include "fks/errors.hpp"
#include "fks/multiplier.hpp"

namespace fks {

namespace {

// enumerate all multi-indices beta with |beta| = k over `dim` axes
void multi_indices(int dim, int k, std::vector<std::array<int, 3>>& out,
                   std::array<int, 3> cur = {0, 0, 0}, int axis = 0) {
    if (axis == dim - 1) {
        cur[static_cast<std::size_t>(axis)] = k;
        out.push_back(cur);
        return;
    }
    for (int use = 0; use <= k; ++use) {
        cur[static_cast<std::size_t>(axis)] = use;
        multi_indices(dim, k - use, out, cur, axis + 1);
    }
}

// apply the derivative multiplier prod_d (i xi_d)^(beta_d)
SpectralField derivative(const SpectralField& f, const std::array<int, 3>& beta) {
    const Grid& g = f.grid;
    SpectralField out = f;
    const double dk = g.dk();
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(g.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        int k[3] = {0, 0, 0};
        g.wavenumbers(static_cast<std::size_t>(i), k);
        cplx m{1.0, 0.0};
        for (int d = 0; d < g.dim; ++d)
            for (int rep = 0; rep < beta[static_cast<std::size_t>(d)]; ++rep)
                m *= cplx{0.0, dk * k[d]};
        out.coef[static_cast<std::size_t>(i)] *= m;
    }
    return out;
}

} // namespace

BernsteinReport bernstein_check(const SpectralField& f, int j, double p, double r, int k,
                                const DyadicFilterBank& bank) {
    if (k < 0 || k > 4) throw ConfigError("bernstein_check supports derivative order 0..4");
    if (!(r == inf || r >= p) && p != inf)
        throw ConfigError("bernstein_check requires r >= p");
    SpectralField block = dyadic_block(f, j, bank);
    double base_p = lp_norm(block, p);
    if (base_p == 0.0)
        throw NumericalError("bernstein_check: the dyadic block vanishes");

    std::vector<std::array<int, 3>> betas;
    multi_indices(f.grid.dim, k, betas);
    double sup_r = 0.0, sup_p = 0.0;
    for (const auto& beta : betas) {
        SpectralField d = derivative(block, beta);
        sup_r = std::max(sup_r, lp_norm(d, r));
        sup_p = std::max(sup_p, lp_norm(d, p));
    }

    const double n = static_cast<double>(f.grid.dim);
    const double inv_p = (p == inf) ? 0.0 : 1.0 / p;
    const double inv_r = (r == inf) ? 0.0 : 1.0 / r;
    BernsteinReport rep;
    rep.j = j;
    rep.k = k;
    rep.p = p;
    rep.r = r;
    rep.block_norm_p = base_p;
    rep.ratio_ball = sup_r / (std::pow(2.0, j * (k + n * (inv_p - inv_r))) * base_p);
    rep.ring_ratio = sup_p / (std::pow(2.0, static_cast<double>(j * k)) * base_p);
    return rep;
}

SemigroupDecayReport semigroup_decay_check(const SpectralField& f, double alpha, int j,
                                           std::span<const double> times, double p,
                                           const DyadicFilterBank& bank) {
    if (times.size() < 3)
        throw ConfigError("semigroup_decay_check needs at least 3 sample times");
    SpectralField block = dyadic_block(f, j, bank);
    double base = lp_norm(block, p);
    if (base == 0.0)
        throw NumericalError("semigroup_decay_check: the dyadic block vanishes");

    std::vector<double> x(times.begin(), times.end());
    std::vector<double> y(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
        SpectralField damped = apply_multiplier(block, Semigroup{alpha, times[i]});
        double v = lp_norm(damped, p);
        if (!(v > 0.0))
            throw NumericalError("semigroup_decay_check: norm vanished during decay");
        y[i] = std::log(v);
    }
    LineFit fit = linear_fit(x, y);

    SemigroupDecayReport rep;
    rep.j = j;
    rep.alpha = alpha;
    rep.kappa = -fit.slope / std::pow(2.0, alpha * j);
    rep.intercept = std::exp(fit.intercept) / base;
    rep.residual = fit.residual_rms;
    return rep;
}

} // namespace fks
