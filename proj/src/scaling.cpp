#include "fks/scaling.hpp"

#include <cmath>
#include <string>

#include "fks/errors.hpp"
#include "fks/kernels.hpp"

namespace fks {

SpectralField scaling_transform(const SpectralField& u0, int log2_lambda, double alpha) {
    if (!(alpha >= 1.0 && alpha <= 2.0))
        throw ConfigError("diffusion exponent must lie in [1, 2], got " + std::to_string(alpha));
    const double lambda = std::ldexp(1.0, log2_lambda);
    SpectralField out;
    out.grid = make_grid(u0.grid.dim, u0.grid.points, u0.grid.period / lambda);
    out.coef = u0.coef;
    kernels::scale(out.coef, std::pow(lambda, alpha));
    return out;
}

} // namespace fks
