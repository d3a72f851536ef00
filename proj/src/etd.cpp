#include "fks/etd.hpp"

#include "fks/errors.hpp"
#include "fks/kernels.hpp"
#include "fks/poisson.hpp"

#include <cmath>
#include <string>

namespace fks {

// phi1(z) = (e^z - 1)/z and phi2(z) = (e^z - 1 - z)/z^2 are evaluated through
// their Taylor series near zero where the direct formulas lose all accuracy
// to cancellation.  The series cutoffs keep the relative error near machine
// precision for the negative-real arguments produced by the dissipation.
double phi_one(double z) {
    if (std::abs(z) < 1e-5) {
        return 1.0 + z / 2.0 * (1.0 + z / 3.0 * (1.0 + z / 4.0 * (1.0 + z / 5.0)));
    }
    return std::expm1(z) / z;
}

double phi_two(double z) {
    if (std::abs(z) < 1e-4) {
        return 0.5 + z / 6.0 * (1.0 + z / 4.0 * (1.0 + z / 5.0 * (1.0 + z / 6.0)));
    }
    return (std::expm1(z) - z) / (z * z);
}

EtdTables make_etd_tables(const Grid& grid, double alpha, double dt) {
    if (!(dt > 0.0))
        throw ConfigError("time step must be positive, got " + std::to_string(dt));
    EtdTables tab;
    tab.dt = dt;
    const std::size_t n = grid.size();
    tab.semigroup.resize(n);
    tab.phi1dt.resize(n);
    tab.phi2dt.resize(n);
    const double dk = grid.dk();
    const std::ptrdiff_t sn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < sn; ++i) {
        int k[3] = {0, 0, 0};
        grid.wavenumbers(static_cast<std::size_t>(i), k);
        double mag = std::sqrt(static_cast<double>(k_sq(k, grid.dim))) * dk;
        double z = -dt * std::pow(mag, alpha);
        tab.semigroup[static_cast<std::size_t>(i)] = std::exp(z);
        tab.phi1dt[static_cast<std::size_t>(i)] = dt * phi_one(z);
        tab.phi2dt[static_cast<std::size_t>(i)] = dt * phi_two(z);
    }
    return tab;
}

SpectralField etd_step(const SpectralField& u, const EtdTables& tab, Integrator method,
                       bool nonlinear, bool dealias) {
    if (tab.semigroup.size() != u.grid.size())
        throw ConfigError("integrator tables were built for a different grid");
    if (!nonlinear) {
        SpectralField out = u;
        kernels::scale_by(out.coef, tab.semigroup);
        return out;
    }
    SpectralField nu = nonlinear_term(u, dealias);
    if (method == Integrator::etd1) {
        // u+ = E u + dt*phi1(dt L) N(u)
        SpectralField out = u;
        kernels::scale_by(out.coef, tab.semigroup);
        kernels::scale_by(nu.coef, tab.phi1dt);
        kernels::axpy(out.coef, nu.coef, 1.0);
        if (!kernels::all_finite(out.coef))
            throw NumericalError("integrator produced a non-finite coefficient");
        return out;
    }
    // ETD2RK (Cox--Matthews):
    //   a  = E u + dt*phi1(dt L) N(u)
    //   u+ = a + dt*phi2(dt L) (N(a) - N(u))
    SpectralField a = u;
    kernels::scale_by(a.coef, tab.semigroup);
    SpectralField nu1 = nu;
    kernels::scale_by(nu1.coef, tab.phi1dt);
    kernels::axpy(a.coef, nu1.coef, 1.0);
    SpectralField na = nonlinear_term(a, dealias);
    kernels::axpy(na.coef, nu.coef, -1.0); // na <- N(a) - N(u)
    kernels::scale_by(na.coef, tab.phi2dt);
    kernels::axpy(a.coef, na.coef, 1.0);
    if (!kernels::all_finite(a.coef))
        throw NumericalError("integrator produced a non-finite coefficient");
    return a;
}

SpectralField etd_step(const SpectralField& u, double dt, const ModelParams& model,
                       Integrator method, bool nonlinear) {
    EtdTables tab = make_etd_tables(u.grid, model.alpha, dt);
    return etd_step(u, tab, method, nonlinear, model.dealias);
}

} // namespace fks
