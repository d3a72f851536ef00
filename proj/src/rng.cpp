#include "fks/rng.hpp"

#include <cmath>

#include "fks/errors.hpp"

namespace fks {

double Rng::next_gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller on two uniforms; u1 in (0,1] keeps the log finite.
    double u1 = next_uniform();
    double u2 = next_uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = two_pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

std::uint64_t substream_seed(std::uint64_t base, std::uint64_t index) {
    Rng mix(base ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    return mix.next_u64();
}

SpectralField random_band_field(const Grid& g, std::uint64_t seed, int kmin, int kmax,
                                double envelope_exponent, double amplitude) {
    if (kmin < 1 || kmax < kmin)
        throw ConfigError("random_band_field requires 1 <= kmin <= kmax");
    if (kmax >= g.points / 2)
        throw ConfigError("random_band_field band exceeds the grid Nyquist range");

    SpectralField f(g);
    const double dk = g.dk();
    const std::int64_t lo2 = static_cast<std::int64_t>(kmin) * kmin;
    const std::int64_t hi2 = static_cast<std::int64_t>(kmax) * kmax;

    // Coefficients are drawn only for canonical representatives (first
    // nonzero component positive); the mirrored coefficient is the conjugate,
    // so the field is real valued.  Each mode's draw is seeded by the
    // wavenumber itself, so a fixed (seed, band, envelope) produces the same
    // trigonometric polynomial on every grid that resolves the band.
    const std::uint64_t radix = 2ull * static_cast<std::uint64_t>(kmax) + 1;
    int k[3] = {0, 0, 0};
    int km[3] = {0, 0, 0};
    for (std::size_t i = 0; i < g.size(); ++i) {
        g.wavenumbers(i, k);
        std::int64_t s2 = k_sq(k, g.dim);
        if (s2 < lo2 || s2 > hi2) continue;
        bool canonical = false;
        for (int d = 0; d < g.dim; ++d) {
            if (k[d] > 0) {
                canonical = true;
                break;
            }
            if (k[d] < 0) break;
        }
        if (!canonical) continue;

        std::uint64_t code = 0;
        for (int d = 0; d < g.dim; ++d)
            code = code * radix + static_cast<std::uint64_t>(k[d] + kmax);
        Rng rng(substream_seed(seed, code));
        double g1 = rng.next_gaussian();
        double g2 = rng.next_gaussian();
        double env = amplitude * std::pow(std::sqrt(static_cast<double>(s2)) * dk,
                                          envelope_exponent);
        cplx c = env * cplx{g1, g2} / std::sqrt(2.0);
        f.coef[i] = c;
        for (int d = 0; d < g.dim; ++d) km[d] = -k[d];
        f.coef[g.flat_of_wavenumbers(km)] = std::conj(c);
    }
    return f;
}

SpectralField gaussian_bump(const Grid& g, double mass, double width) {
    if (!(width > 0.0)) throw ConfigError("gaussian bump width must be positive");
    // A periodized gaussian has exactly gaussian Fourier coefficients:
    //   coef(k) = (mass / period^dim) * exp(-|xi_k|^2 * width^2 / 2) * phase
    // with the phase centering the bump at period/2 per axis.
    SpectralField f(g);
    const double dk = g.dk();
    double volume = 1.0;
    for (int d = 0; d < g.dim; ++d) volume *= g.period;
    int k[3] = {0, 0, 0};
    for (std::size_t i = 0; i < g.size(); ++i) {
        g.wavenumbers(i, k);
        double xi2 = static_cast<double>(k_sq(k, g.dim)) * dk * dk;
        std::int64_t ksum = 0;
        for (int d = 0; d < g.dim; ++d) ksum += k[d];
        // exp(-i xi . center) with center = (period/2, ...) is (-1)^(sum k)
        double phase = (ksum % 2 == 0) ? 1.0 : -1.0;
        f.coef[i] = (mass / volume) * std::exp(-0.5 * xi2 * width * width) * phase;
    }
    return f;
}

} // namespace fks
