#include "fks/norms.hpp"

#include <cmath>

#include "fks/errors.hpp"
#include "fks/kernels.hpp"
#include "fks/transform.hpp"

namespace fks {

double lp_norm(const SpectralField& f, double p) {
    if (p == inf) {
        std::vector<cplx> phys = transform_inverse_complex(f);
        return kernels::max_abs(std::span<const cplx>(phys));
    }
    if (!(p >= 1.0))
        throw ConfigError("lp_norm requires p >= 1 (or p = inf)");
    std::vector<cplx> phys = transform_inverse_complex(f);
    double s = (p == 2.0) ? kernels::sum_sq_abs(std::span<const cplx>(phys))
                          : kernels::sum_pow_abs(std::span<const cplx>(phys), p);
    return std::pow(s * cell_volume(f.grid), 1.0 / p);
}

bool besov_params_distributional(const BesovParams& bp, int dim) {
    const double ratio = static_cast<double>(dim) / bp.p;
    if (bp.s < ratio) return false;
    if (bp.s == ratio && bp.q == 1.0) return false;
    return true;
}

double block_lp_norm(const SpectralField& f, int j, const DyadicFilterBank& bank, double p) {
    if (p == 2.0) {
        // Parseval: ||Delta_j f||_2^2 = period^dim * sum |phi_j(xi) coef|^2.
        // Weights enter squared, so square the tabulated shell profile.
        const std::vector<double>& w = bank.shell_weights(j);
        std::vector<double> w2(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) w2[i] = w[i] * w[i];
        double volume = 1.0;
        for (int d = 0; d < f.grid.dim; ++d) volume *= f.grid.period;
        return std::sqrt(volume * kernels::weighted_sum_sq_abs(
                                      std::span<const cplx>(f.coef),
                                      std::span<const double>(w2)));
    }
    return lp_norm(dyadic_block(f, j, bank), p);
}

namespace {

void validate_besov(const BesovParams& bp) {
    if (!(bp.p >= 1.0) && bp.p != inf)
        throw ConfigError("Besov integrability index p must be >= 1 or inf");
    if (!(bp.q >= 1.0) && bp.q != inf)
        throw ConfigError("Besov summation index q must be >= 1 or inf");
    if (!std::isfinite(bp.s)) throw ConfigError("Besov smoothness index must be finite");
}

} // namespace

BesovReport besov_report(const SpectralField& f, const BesovParams& bp,
                         const DyadicFilterBank& bank) {
    validate_besov(bp);
    if (!f.grid.same_shape(bank.grid))
        throw ConfigError("besov_norm: field grid does not match the filter bank");
    BesovReport rep;
    rep.params = bp;
    rep.j_min = bank.j_min;
    rep.j_max = bank.j_max;

    double acc = 0.0;
    double sup = 0.0;
    for (int j = bank.j_min; j <= bank.j_max; ++j) {
        double bn = block_lp_norm(f, j, bank, bp.p);
        double w = std::pow(2.0, bp.s * j);
        double term = w * bn;
        rep.rows.push_back({j, bn, w, term});
        if (bp.q == inf)
            sup = std::max(sup, term);
        else
            acc += std::pow(term, bp.q);
    }
    rep.value = (bp.q == inf) ? sup : std::pow(acc, 1.0 / bp.q);
    return rep;
}

double besov_norm(const SpectralField& f, const BesovParams& bp,
                  const DyadicFilterBank& bank) {
    return besov_report(f, bp, bank).value;
}

double mixed_norm(std::span<const SpectralField> series, double T,
                  const MixedNormParams& mp, const DyadicFilterBank& bank) {
    validate_besov(mp.besov);
    if (series.size() < 2)
        throw ConfigError("mixed_norm needs at least two samples on [0, T]");
    if (!(T > 0.0)) throw ConfigError("mixed_norm needs T > 0");
    if (!(mp.rho >= 1.0) && mp.rho != inf)
        throw ConfigError("mixed_norm temporal exponent rho must be >= 1 or inf");
    for (const SpectralField& f : series)
        if (!f.grid.same_shape(bank.grid))
            throw ConfigError("mixed_norm: field grid does not match the filter bank");

    const std::size_t m = series.size();
    const double h = T / static_cast<double>(m - 1);

    double acc = 0.0;
    double sup = 0.0;
    std::vector<double> a(m);
    for (int j = bank.j_min; j <= bank.j_max; ++j) {
        for (std::size_t i = 0; i < m; ++i)
            a[i] = block_lp_norm(series[i], j, bank, mp.besov.p);
        double time_part;
        if (mp.rho == inf) {
            time_part = 0.0;
            for (double v : a) time_part = std::max(time_part, v);
        } else {
            double integral = 0.0;
            for (std::size_t i = 0; i + 1 < m; ++i)
                integral += 0.5 * h * (std::pow(a[i], mp.rho) + std::pow(a[i + 1], mp.rho));
            time_part = std::pow(integral, 1.0 / mp.rho);
        }
        double term = std::pow(2.0, mp.besov.s * j) * time_part;
        if (mp.besov.q == inf)
            sup = std::max(sup, term);
        else
            acc += std::pow(term, mp.besov.q);
    }
    return (mp.besov.q == inf) ? sup : std::pow(acc, 1.0 / mp.besov.q);
}

} // namespace fks
