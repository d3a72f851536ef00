#pragma once

#include <vector>

#include "fks/norms.hpp"
#include "fks/multiplier.hpp"

namespace fks {

// Successive approximation of the integral (Duhamel) form
//   u(t) = e^{-t L} u0 - integral_0^t e^{-(t-s) L} div(u grad psi)(s) ds
// on a uniform time lattice over [0, T], starting from the free evolution.
// Increments between sweeps are measured in the intersection norm
//   max( L~^{rho1}([0,T]; B^{s1}_{p,q}),  L~^{rho2}([0,T]; B^{s2}_{p,q}) )
// with s1,2 = -1 + dim/p +- eps and rho1,2 = alpha/(alpha - 1 +- eps).
struct PicardConfig {
    int max_iters = 8;     // number of corrector sweeps
    int nodes = 64;        // quadrature nodes on [0, T] (>= 8)
    double eps = 0.0;      // 0 -> (alpha - 1)/2, must satisfy 0 < eps < alpha - 1
    double p = 2.0;
    double q = 2.0;
    double tol = 0.0;      // stop early when d_k falls below tol (0 = never)
};

struct PicardResult {
    std::vector<double> increment_norms;     // d_k for k = 0, 1, ...
    std::vector<double> contraction_ratios;  // d_k / d_{k-1}
    bool contracting = true;                 // false after 3 consecutive growths
    bool converged = false;                  // d_k reached tol
    double s1 = 0.0, s2 = 0.0, rho1 = 0.0, rho2 = 0.0;
    std::vector<double> node_times;
    std::vector<SpectralField> fixed_point;  // last sweep, one field per node
};

PicardResult picard_iterate(const SpectralField& u0, double T, const PicardConfig& cfg,
                            const ModelParams& model, const DyadicFilterBank& bank);

} // namespace fks
