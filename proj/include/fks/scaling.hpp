#pragma once

#include "fks/field.hpp"

namespace fks {

// Dyadic self-similar rescaling u -> lambda^alpha u(lambda x) with
// lambda = 2^log2_lambda, realized exactly on the lattice: the coefficient
// array is multiplied by lambda^alpha and the grid period shrinks to
// period/lambda, so stored index k now carries frequency lambda * xi_k.
// In the integral normalization (coefficient * period^dim) this is the
// relabeling u_hat_lambda(xi) = lambda^(alpha - dim) u_hat(xi / lambda);
// in particular the mass scales exactly by lambda^(alpha - dim) while the
// critical-regularity norm is left invariant.
SpectralField scaling_transform(const SpectralField& u0, int log2_lambda, double alpha);

} // namespace fks
