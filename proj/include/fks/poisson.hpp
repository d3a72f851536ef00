#pragma once

#include <vector>

#include "fks/field.hpp"

namespace fks {

// Attractant concentration recovered from the density by the Poisson
// coupling: psi has coefficients coef(u)/|xi|^2 with zero mean, and grad
// holds the components of its gradient (Riesz multipliers applied to u).
struct AttractantField {
    SpectralField psi;
    std::vector<SpectralField> grad;
};

AttractantField poisson_attractant(const SpectralField& u);

// Transport nonlinearity N(u) = -div(u grad(psi)) with the pointwise
// products dealiased (optional for reference paths).  The zero mode is
// exactly zero: the divergence multiplier vanishes at xi = 0.
SpectralField nonlinear_term(const SpectralField& u, bool dealias = true);

namespace serial {
SpectralField nonlinear_term(const SpectralField& u, bool dealias = true);
} // namespace serial

} // namespace fks
