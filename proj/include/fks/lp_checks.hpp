#pragma once

#include <span>

#include "fks/norms.hpp"

namespace fks {

// Derivative/norm ratios of one dyadic block, normalized by the expected
// powers of the shell scale 2^j.  ratio_ball tests the smoothing inequality
//   sup_{|beta|=k} ||d^beta Delta_j f||_r <= C 2^(j(k + n(1/p - 1/r))) ||Delta_j f||_p
// and ring_ratio tests the two-sided derivative equivalence on the shell,
//   C^-(1+k) 2^(jk) ||Delta_j f||_p <= sup_{|beta|=k} ||d^beta Delta_j f||_p
//                                   <= C^(1+k) 2^(jk) ||Delta_j f||_p.
// Uniform boundedness of these ratios across j is what the caller asserts.
struct BernsteinReport {
    int j = 0;
    int k = 0;
    double p = 2.0;
    double r = 2.0;
    double block_norm_p = 0.0; // ||Delta_j f||_p
    double ratio_ball = 0.0;   // sup_beta ||d^beta Delta_j f||_r / (2^(j(k+n(1/p-1/r))) ||Delta_j f||_p)
    double ring_ratio = 0.0;   // sup_beta ||d^beta Delta_j f||_p / (2^(jk) ||Delta_j f||_p)
};

BernsteinReport bernstein_check(const SpectralField& f, int j, double p, double r, int k,
                                const DyadicFilterBank& bank);

// Exponential decay fit of t -> ||exp(-t Lambda^alpha) Delta_j f||_p against
// the model K * ||Delta_j f||_p * exp(-kappa 2^(alpha j) t).
struct SemigroupDecayReport {
    int j = 0;
    double alpha = 2.0;
    double kappa = 0.0;     // fitted rate, normalized by 2^(alpha j)
    double intercept = 0.0; // fitted K = exp(intercept) / ||Delta_j f||_p
    double residual = 0.0;  // rms residual of the log-linear fit
};

SemigroupDecayReport semigroup_decay_check(const SpectralField& f, double alpha, int j,
                                           std::span<const double> times, double p,
                                           const DyadicFilterBank& bank);

} // namespace fks
