#pragma once

#include <span>
#include <variant>
#include <vector>

#include "fks/field.hpp"

namespace fks {

// Fourier multipliers used throughout the pipeline.  Conventions:
//   FracLaplacian   |xi|^alpha                    (fractional dissipation symbol)
//   Semigroup       exp(-t |xi|^alpha)            (dissipation semigroup at time t)
//   RieszGrad       i xi[axis] / |xi|^2, 0 at 0   (gradient of the inverse Laplacian)
//   GevreyWeight    exp(rate * t^(1/alpha) * |xi|_1)
// with |xi|_1 the l1 norm of the frequency vector.
struct FracLaplacian {
    double alpha = 2.0;
};

struct Semigroup {
    double alpha = 2.0;
    double t = 0.0;
};

struct RieszGrad {
    int axis = 0; // 0-based
};

struct GevreyWeight {
    double alpha = 2.0;
    double t = 0.0;
    double rate = 1.0;
};

using MultiplierSpec = std::variant<FracLaplacian, Semigroup, RieszGrad, GevreyWeight>;

// Model-wide parameters shared by the solver and the analysis studies.
struct ModelParams {
    double alpha = 2.0;
    bool dealias = true;
    double gevrey_rate = 0.0; // 0 -> default_gevrey_rate(alpha, dim)
};

// rate 1 for alpha > 1, 1/(2*dim) in the boundary case alpha == 1
double default_gevrey_rate(double alpha, int dim);

void validate_model(const ModelParams& m);

// symbol value at one frequency vector (xi.size() = dimension)
cplx evaluate_symbol(const MultiplierSpec& spec, std::span<const double> xi);

// tabulate the symbol over the whole lattice of g
std::vector<cplx> tabulate_symbol(const MultiplierSpec& spec, const Grid& g);

// coefficient-wise application; exact on plane waves
SpectralField apply_multiplier(const SpectralField& f, const MultiplierSpec& spec);

namespace serial {
SpectralField apply_multiplier(const SpectralField& f, const MultiplierSpec& spec);
} // namespace serial

} // namespace fks
