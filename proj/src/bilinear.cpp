#include "fks/bilinear.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fks/errors.hpp"
#include "fks/kernels.hpp"
#include "fks/multiplier.hpp"
#include "fks/product.hpp"
#include "fks/rng.hpp"

namespace fks {

const char* bilinear_family_name(BilinearFamily f) {
    switch (f) {
    case BilinearFamily::besov_smoothing: return "besov_smoothing";
    case BilinearFamily::sup_critical: return "sup_critical";
    case BilinearFamily::uniform_critical: return "uniform_critical";
    }
    return "unknown";
}

namespace {

double inv(double rho) { return std::isinf(rho) ? 0.0 : 1.0 / rho; }

void validate_family(const BilinearParams& bp) {
    switch (bp.family) {
    case BilinearFamily::besov_smoothing:
        if (!(bp.s > 0.0))
            throw ConfigError("the smoothing estimate needs regularity s > 0");
        if (std::isinf(bp.p))
            throw ConfigError("the smoothing estimate needs p < inf");
        if (bp.eps < 0.0 || (bp.eps == 0.0 && bp.q != 1.0))
            throw ConfigError("the shift must be positive (zero shift only with q = 1)");
        if (std::abs(inv(bp.rho) - inv(bp.rho1) - inv(bp.rho2)) > 1e-9)
            throw ConfigError("temporal exponents must satisfy 1/rho = 1/rho1 + 1/rho2");
        break;
    case BilinearFamily::sup_critical:
        if (!(bp.alpha >= 1.0 && bp.alpha < 2.0))
            throw ConfigError("the sup-critical estimate holds for 1 <= alpha < 2");
        break;
    case BilinearFamily::uniform_critical:
        if (!(bp.p >= 1.0))
            throw ConfigError("integrability index must be at least 1");
        break;
    }
}

// static fields enter the mixed norms as constant-in-time series on [0, 1]
double static_mixed_norm(const SpectralField& f, const MixedNormParams& mp,
                         const DyadicFilterBank& bank) {
    const SpectralField series[3] = {f, f, f};
    return mixed_norm(series, 1.0, mp, bank);
}

// max over components of the symmetrized transport product's norm
double transport_lhs(const SpectralField& u, const SpectralField& v,
                     const MixedNormParams& mp, const DyadicFilterBank& bank) {
    double lhs = 0.0;
    for (int m = 0; m < u.grid.dim; ++m) {
        SpectralField w = pointwise_product_dealiased(u, apply_multiplier(v, RieszGrad{m}));
        SpectralField w2 = pointwise_product_dealiased(v, apply_multiplier(u, RieszGrad{m}));
        kernels::axpy(w.coef, w2.coef, 1.0);
        lhs = std::max(lhs, static_mixed_norm(w, mp, bank));
    }
    return lhs;
}

} // namespace

BilinearSample bilinear_pair_check(const SpectralField& u, const SpectralField& v,
                                   const BilinearParams& bp, const DyadicFilterBank& bank) {
    if (!u.grid.same_shape(v.grid) || !u.grid.same_shape(bank.grid))
        throw ConfigError("fields and filter bank must share one grid");
    validate_family(bp);
    const double n_over_p = static_cast<double>(u.grid.dim) / bp.p;

    BilinearSample out;
    switch (bp.family) {
    case BilinearFamily::besov_smoothing: {
        const MixedNormParams lhs_norm{bp.rho, BesovParams{bp.s, bp.p, bp.q}};
        const MixedNormParams hi{bp.rho1, BesovParams{bp.s + bp.eps, bp.p, bp.q}};
        const MixedNormParams lo{bp.rho2, BesovParams{-1.0 + n_over_p - bp.eps, bp.p, bp.q}};
        out.lhs = transport_lhs(u, v, lhs_norm, bank);
        out.rhs = static_mixed_norm(u, hi, bank) * static_mixed_norm(v, lo, bank) +
                  static_mixed_norm(u, lo, bank) * static_mixed_norm(v, hi, bank);
        break;
    }
    case BilinearFamily::sup_critical: {
        const MixedNormParams lhs_norm{1.0, BesovParams{1.0 - bp.alpha, inf, 1.0}};
        const MixedNormParams sup_crit{inf, BesovParams{-bp.alpha, inf, 1.0}};
        const MixedNormParams int_zero{1.0, BesovParams{0.0, inf, 1.0}};
        out.lhs = transport_lhs(u, v, lhs_norm, bank);
        out.rhs = static_mixed_norm(u, sup_crit, bank) * static_mixed_norm(v, int_zero, bank) +
                  static_mixed_norm(u, int_zero, bank) * static_mixed_norm(v, sup_crit, bank);
        break;
    }
    case BilinearFamily::uniform_critical: {
        const MixedNormParams nm{inf, BesovParams{-1.0 + n_over_p, bp.p, 1.0}};
        out.lhs = transport_lhs(u, v, nm, bank);
        out.rhs = static_mixed_norm(u, nm, bank) * static_mixed_norm(v, nm, bank);
        break;
    }
    }
    out.ratio = out.rhs > 0.0 ? out.lhs / out.rhs : 0.0;
    return out;
}

BilinearCheckReport bilinear_estimate_check(const Grid& g, const BilinearParams& bp,
                                            int ensemble, std::uint64_t seed,
                                            const DyadicFilterBank& bank) {
    if (ensemble < 1)
        throw ConfigError("ensemble size must be positive");
    validate_family(bp);
    BilinearCheckReport report;
    report.params = bp;
    report.ensemble = ensemble;
    report.seed = seed;
    const int band = bp.band > 0 ? bp.band : std::max(1, dealias_cutoff_index(g) / 2);
    const double envelope = -0.5 * (g.dim + 1);
    std::vector<double> ratios;
    ratios.reserve(static_cast<std::size_t>(ensemble));
    for (int member = 0; member < ensemble; ++member) {
        const auto idx = static_cast<std::uint64_t>(member);
        SpectralField u = random_band_field(g, substream_seed(seed, 2 * idx), 1, band,
                                            envelope, 1.0);
        SpectralField v = random_band_field(g, substream_seed(seed, 2 * idx + 1), 1, band,
                                            envelope, 1.0);
        BilinearSample s = bilinear_pair_check(u, v, bp, bank);
        s.member = member;
        report.samples.push_back(s);
        ratios.push_back(s.ratio);
        report.max_ratio = std::max(report.max_ratio, s.ratio);
    }
    std::sort(ratios.begin(), ratios.end());
    const std::size_t mid = ratios.size() / 2;
    report.median_ratio = ratios.size() % 2 == 1
                              ? ratios[mid]
                              : 0.5 * (ratios[mid - 1] + ratios[mid]);
    return report;
}

} // namespace fks
