#pragma once

#include <cstdint>
#include <vector>

#include "fks/norms.hpp"

namespace fks {

// The three product estimates checked empirically.  Each bounds the mixed
// norm of the symmetrized transport product
//     w_m = u d_m (-Delta)^-1 v + v d_m (-Delta)^-1 u,   m = 1..dim
// (we take the largest component norm as the LHS) by products of mixed norms
// of u and v:
//   besov_smoothing:  LHS in (rho, B^s_{p,q})  <=  ||u||_(rho1, s+eps) ||v||_(rho2, -1+n/p-eps)
//                      + the same with u and v swapped;  needs s > 0, p < inf,
//                      1/rho = 1/rho1 + 1/rho2, and eps > 0 (eps = 0 only with q = 1).
//   sup_critical:     LHS in (1, B^{1-alpha}_{inf,1})  <=  ||u||_(inf, B^{-alpha}_{inf,1})
//                      ||v||_(1, B^0_{inf,1}) + swapped;  needs 1 <= alpha < 2.
//   uniform_critical: LHS in (inf, B^{-1+n/p}_{p,1}) <= ||u|| ||v|| in the same norm.
// Static fields are promoted to constant-in-time series, so every finite-rho
// time factor cancels between the two sides of the ratio.
enum class BilinearFamily { besov_smoothing, sup_critical, uniform_critical };

const char* bilinear_family_name(BilinearFamily f);

struct BilinearParams {
    BilinearFamily family = BilinearFamily::besov_smoothing;
    double alpha = 1.5; // sup_critical only
    double s = 1.0;     // besov_smoothing regularity, > 0
    double eps = 0.5;   // besov_smoothing shift
    double p = 2.0;
    double q = 2.0;
    double rho = 1.0, rho1 = 2.0, rho2 = 2.0; // besov_smoothing Hoelder triple
    int band = 0; // ensemble band limit; 0 -> half the dealias cutoff of the grid
};

struct BilinearSample {
    int member = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
};

struct BilinearCheckReport {
    BilinearParams params;
    int ensemble = 0;
    std::uint64_t seed = 0;
    double max_ratio = 0.0;
    double median_ratio = 0.0;
    std::vector<BilinearSample> samples;
};

// ratio for one explicit pair of fields (also the tests' entry point)
BilinearSample bilinear_pair_check(const SpectralField& u, const SpectralField& v,
                                   const BilinearParams& bp, const DyadicFilterBank& bank);

// seeded ensemble of band-limited Gaussian pairs: spectral envelope
// |xi|^{-(dim+1)/2}, band limited to half the dealias cutoff
BilinearCheckReport bilinear_estimate_check(const Grid& g, const BilinearParams& bp,
                                            int ensemble, std::uint64_t seed,
                                            const DyadicFilterBank& bank);

} // namespace fks
