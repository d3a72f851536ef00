#pragma once

#include <vector>

#include "fks/field.hpp"
#include "fks/multiplier.hpp"

namespace fks {

// phi functions of exponential integrators, evaluated stably near 0:
//   phi1(z) = (e^z - 1)/z,  phi2(z) = (e^z - 1 - z)/z^2
double phi_one(double z);
double phi_two(double z);

enum class Integrator { etd1, etd2rk };

// Per-step multiplier tables for a fixed step size:
//   semigroup[i] = exp(-dt |xi_i|^alpha)
//   phi1dt[i]    = dt * phi1(-dt |xi_i|^alpha)
//   phi2dt[i]    = dt * phi2(-dt |xi_i|^alpha)
struct EtdTables {
    double dt = 0.0;
    std::vector<double> semigroup;
    std::vector<double> phi1dt;
    std::vector<double> phi2dt;
};

EtdTables make_etd_tables(const Grid& g, double alpha, double dt);

// One step of the exponential integrator applied to
//   d/dt coef = -|xi|^alpha coef + N(u),  N(u) = -div(u grad psi).
// etd1:   u+ = E u + dt phi1 N(u)
// etd2rk: a  = E u + dt phi1 N(u);  u+ = a + dt phi2 (N(a) - N(u))
// Throws NumericalError when non-finite coefficients appear.
SpectralField etd_step(const SpectralField& u, const EtdTables& tables,
                       Integrator method, bool nonlinear, bool dealias);

// convenience wrapper that builds the tables on the fly
SpectralField etd_step(const SpectralField& u, double dt, const ModelParams& model,
                       Integrator method = Integrator::etd2rk, bool nonlinear = true);

} // namespace fks
