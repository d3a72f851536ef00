#include "fks/field.hpp"

#include <cmath>

namespace fks {

SpectralField zero_field(const Grid& g) { return SpectralField(g); }

SpectralField plane_wave(const Grid& g, const int* k, cplx amplitude) {
    SpectralField f(g);
    f.coef[g.flat_of_wavenumbers(k)] = amplitude;
    return f;
}

double cell_volume(const Grid& g) {
    double h = g.period / g.points;
    double v = 1.0;
    for (int d = 0; d < g.dim; ++d) v *= h;
    return v;
}

double field_mass(const SpectralField& f) {
    double vol = 1.0;
    for (int d = 0; d < f.grid.dim; ++d) vol *= f.grid.period;
    return f.coef[0].real() * vol;
}

double hermitian_defect(const SpectralField& f) {
    const Grid& g = f.grid;
    double worst = 0.0;
    int k[3] = {0, 0, 0};
    int km[3] = {0, 0, 0};
    for (std::size_t i = 0; i < g.size(); ++i) {
        g.wavenumbers(i, k);
        bool has_mirror = true;
        for (int d = 0; d < g.dim; ++d) {
            // the -points/2 column has no positive partner on an even grid
            if (k[d] == -g.points / 2 && k[d] != 0) has_mirror = false;
            km[d] = -k[d];
        }
        if (!has_mirror) continue;
        cplx diff = f.coef[i] - std::conj(f.coef[g.flat_of_wavenumbers(km)]);
        worst = std::max(worst, std::abs(diff));
    }
    return worst;
}

} // namespace fks
