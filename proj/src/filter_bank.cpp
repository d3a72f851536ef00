#include "fks/filter_bank.hpp"

#include <cmath>
#include <string>

#include "fks/errors.hpp"
#include "fks/kernels.hpp"

namespace fks {

double lowpass_profile(double r) {
    // 1 on [0, 3/4], 0 on [4/3, inf), C^2 smoothstep (quintic) in between
    constexpr double lo = 0.75;
    constexpr double hi = 4.0 / 3.0;
    if (r <= lo) return 1.0;
    if (r >= hi) return 0.0;
    double s = (r - lo) / (hi - lo);
    double smooth = s * s * s * (10.0 + s * (-15.0 + 6.0 * s));
    return 1.0 - smooth;
}

double shell_profile(double r) { return lowpass_profile(0.5 * r) - lowpass_profile(r); }

DyadicFilterBank build_filter_bank(const Grid& g) {
    DyadicFilterBank bank;
    bank.grid = g;

    // shell j meets a frequency of magnitude m iff 3/4 < 2^-j m < 8/3;
    // scan a safe j window around the lattice extremes and keep the shells
    // with nonempty lattice support (they form a contiguous range).
    const double dk = g.dk();
    const double m_min = dk;
    const double m_max = dk * (g.points / 2) * std::sqrt(static_cast<double>(g.dim));
    const int j_lo = static_cast<int>(std::floor(std::log2(m_min * 3.0 / 8.0))) - 1;
    const int j_hi = static_cast<int>(std::ceil(std::log2(m_max * 4.0 / 3.0))) + 1;

    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(g.size());
    std::vector<double> mag(g.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        int k[3] = {0, 0, 0};
        g.wavenumbers(static_cast<std::size_t>(i), k);
        mag[static_cast<std::size_t>(i)] =
            std::sqrt(static_cast<double>(k_sq(k, g.dim))) * dk;
    }

    for (int j = j_lo; j <= j_hi; ++j) {
        std::vector<double> w(g.size());
        bool nonempty = false;
        const double scale = std::ldexp(1.0, -j); // exact 2^-j
#pragma omp parallel for schedule(static) reduction(|| : nonempty)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            double v = shell_profile(scale * mag[static_cast<std::size_t>(i)]);
            w[static_cast<std::size_t>(i)] = v;
            nonempty = nonempty || (v != 0.0);
        }
        if (!nonempty) {
            if (bank.weights.empty()) continue; // still below the first shell
            break;                              // past the last shell
        }
        if (bank.weights.empty()) bank.j_min = j;
        bank.j_max = j;
        bank.weights.push_back(std::move(w));
    }
    if (bank.weights.empty())
        throw NumericalError("filter bank construction found no nonempty shells");
    return bank;
}

SpectralField dyadic_block(const SpectralField& f, int j, const DyadicFilterBank& bank) {
    if (!f.grid.same_shape(bank.grid))
        throw ConfigError("dyadic_block: field grid does not match the filter bank");
    if (!bank.in_range(j))
        throw ConfigError("dyadic_block: shell index " + std::to_string(j) +
                          " outside the resolved range [" + std::to_string(bank.j_min) +
                          ", " + std::to_string(bank.j_max) + "]");
    SpectralField out = f;
    const std::vector<double>& w = bank.shell_weights(j);
    kernels::scale_by(std::span<cplx>(out.coef), std::span<const double>(w));
    return out;
}

SpectralField low_pass(const SpectralField& f, int j, const DyadicFilterBank& bank) {
    if (!f.grid.same_shape(bank.grid))
        throw ConfigError("low_pass: field grid does not match the filter bank");
    const Grid& g = f.grid;
    SpectralField out = f;
    const double dk = g.dk();
    const double scale = std::ldexp(1.0, -j);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(g.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        int k[3] = {0, 0, 0};
        g.wavenumbers(static_cast<std::size_t>(i), k);
        double mag = std::sqrt(static_cast<double>(k_sq(k, g.dim))) * dk;
        out.coef[static_cast<std::size_t>(i)] *= lowpass_profile(scale * mag);
    }
    return out;
}

namespace serial {

SpectralField dyadic_block(const SpectralField& f, int j, const DyadicFilterBank& bank) {
    if (!f.grid.same_shape(bank.grid))
        throw ConfigError("dyadic_block: field grid does not match the filter bank");
    if (!bank.in_range(j)) throw ConfigError("dyadic_block: shell index out of range");
    SpectralField out = f;
    const std::vector<double>& w = bank.shell_weights(j);
    for (std::size_t i = 0; i < out.coef.size(); ++i) out.coef[i] *= w[i];
    return out;
}

} // namespace serial

} // namespace fks
