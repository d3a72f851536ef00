#pragma once

#include <limits>
#include <span>
#include <vector>

#include "fks/filter_bank.hpp"

namespace fks {

inline constexpr double inf = std::numeric_limits<double>::infinity();

// Lebesgue norm of the field as uniform-grid quadrature of |f|^p over the
// grid points (maximum over points for p = inf).  For p = 2 this agrees with
// the Parseval evaluation from the coefficients to roundoff.
double lp_norm(const SpectralField& f, double p);

struct BesovParams {
    double s = 0.0;
    double p = 2.0;
    double q = 2.0;
};

// true when the (s, p, q) triple only controls the field modulo low-frequency
// redistribution (s >= dim/p except for the q = 1 borderline); callers report
// this alongside computed values
bool besov_params_distributional(const BesovParams& bp, int dim);

// per-shell breakdown of a Besov norm evaluation
struct BesovBlockRow {
    int j;
    double block_lp_norm; // ||Delta_j f||_p
    double weight;        // 2^(j s)
    double contribution;  // weight * block_lp_norm
};

struct BesovReport {
    BesovParams params;
    double value = 0.0;
    int j_min = 0;
    int j_max = -1;
    std::vector<BesovBlockRow> rows;
};

// l^q over j of 2^(j s) ||Delta_j f||_p, restricted to the resolved shells
double besov_norm(const SpectralField& f, const BesovParams& bp, const DyadicFilterBank& bank);
BesovReport besov_report(const SpectralField& f, const BesovParams& bp,
                         const DyadicFilterBank& bank);

// ||Delta_j f||_p with a coefficient-space Parseval fast path for p = 2
double block_lp_norm(const SpectralField& f, int j, const DyadicFilterBank& bank, double p);

struct MixedNormParams {
    double rho = 1.0; // temporal exponent (inf for sup in time)
    BesovParams besov;
};

// Mixed time-frequency norm of a uniformly sampled series on [0, T]:
// l^q over j of 2^(j s) * ( integral over [0,T] of ||Delta_j f(t)||_p^rho )^(1/rho)
// with the time integral evaluated by the trapezoid rule on the samples.
double mixed_norm(std::span<const SpectralField> series, double T,
                  const MixedNormParams& mp, const DyadicFilterBank& bank);

} // namespace fks
