#pragma once

#include <complex>
#include <vector>

#include "fks/grid.hpp"

namespace fks {

using cplx = std::complex<double>;

// A scalar field held as Fourier coefficients on a Grid.  The coefficient at
// wavenumber 0 is the spatial mean of the field, i.e. the represented field is
//   f(x) = sum_k coef[k] * exp(i * xi_k . x).
struct SpectralField {
    Grid grid;
    std::vector<cplx> coef;

    SpectralField() = default;
    explicit SpectralField(const Grid& g) : grid(g), coef(g.size(), cplx{0.0, 0.0}) {}

    cplx& at(const int* k) { return coef[grid.flat_of_wavenumbers(k)]; }
    const cplx& at(const int* k) const { return coef[grid.flat_of_wavenumbers(k)]; }

    // convenience accessors for the common 1d/2d/3d cases
    cplx& at(int k0) { int k[1] = {k0}; return at(k); }
    cplx& at(int k0, int k1) { int k[2] = {k0, k1}; return at(k); }
    cplx& at(int k0, int k1, int k2) { int k[3] = {k0, k1, k2}; return at(k); }
};

SpectralField zero_field(const Grid& g);

// single complex plane wave exp(i xi_k . x) with unit amplitude
SpectralField plane_wave(const Grid& g, const int* k, cplx amplitude = {1.0, 0.0});

// mass = integral of the field over the torus = mean * period^dim
double field_mass(const SpectralField& f);

double cell_volume(const Grid& g);

// largest |coef| discrepancy against the Hermitian symmetry
// coef(-k) == conj(coef(k)) of a real-valued field
double hermitian_defect(const SpectralField& f);

} // namespace fks
