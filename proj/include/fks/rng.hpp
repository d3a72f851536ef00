#pragma once

#include <cstdint>

#include "fks/field.hpp"

namespace fks {

// Deterministic 64-bit generator (splitmix64) with a hand-rolled Box-Muller
// gaussian, so that seeded experiments reproduce bit-for-bit regardless of
// the standard library in use.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in (0,1]
    double next_uniform() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    double next_gaussian();

private:
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// derive an independent stream for ensemble member `index`
std::uint64_t substream_seed(std::uint64_t base, std::uint64_t index);

// Real-valued random field with independent complex gaussian coefficients on
// the band kmin <= |k| <= kmax, scaled by amplitude * |xi|^envelope_exponent
// and mirrored to satisfy the Hermitian symmetry.  The mean is zero.
SpectralField random_band_field(const Grid& g, std::uint64_t seed, int kmin, int kmax,
                                double envelope_exponent, double amplitude);

// Periodized isotropic gaussian bump centered in the box with prescribed
// integral (mass) and physical width.
SpectralField gaussian_bump(const Grid& g, double mass, double width);

} // namespace fks
