#include "fks/multiplier.hpp"

#include <cmath>
#include <string>

#include "fks/kernels.hpp"

namespace fks {

double default_gevrey_rate(double alpha, int dim) {
    return alpha > 1.0 ? 1.0 : 1.0 / (2.0 * dim);
}

void validate_model(const ModelParams& m) {
    if (!(m.alpha >= 1.0 && m.alpha <= 2.0))
        throw ConfigError("alpha must lie in [1, 2], got " + std::to_string(m.alpha));
    if (m.gevrey_rate < 0.0)
        throw ConfigError("gevrey_rate must be nonnegative");
}

namespace {

inline double xi_norm(std::span<const double> xi) {
    double s = 0.0;
    for (double x : xi) s += x * x;
    return std::sqrt(s);
}

inline double xi_l1(std::span<const double> xi) {
    double s = 0.0;
    for (double x : xi) s += std::abs(x);
    return s;
}

struct SymbolEval {
    std::span<const double> xi;

    cplx operator()(const FracLaplacian& m) const {
        return cplx{std::pow(xi_norm(xi), m.alpha), 0.0};
    }
    cplx operator()(const Semigroup& m) const {
        return cplx{std::exp(-m.t * std::pow(xi_norm(xi), m.alpha)), 0.0};
    }
    cplx operator()(const RieszGrad& m) const {
        double n2 = 0.0;
        for (double x : xi) n2 += x * x;
        if (n2 == 0.0) return cplx{0.0, 0.0};
        return cplx{0.0, xi[static_cast<std::size_t>(m.axis)] / n2};
    }
    cplx operator()(const GevreyWeight& m) const {
        return cplx{std::exp(m.rate * std::pow(m.t, 1.0 / m.alpha) * xi_l1(xi)), 0.0};
    }
};

int spec_min_dim(const MultiplierSpec& spec) {
    if (const RieszGrad* rg = std::get_if<RieszGrad>(&spec)) return rg->axis + 1;
    return 1;
}

void validate_spec(const MultiplierSpec& spec, int dim) {
    if (const FracLaplacian* m = std::get_if<FracLaplacian>(&spec)) {
        if (!(m->alpha >= 1.0 && m->alpha <= 2.0))
            throw ConfigError("FracLaplacian alpha must lie in [1, 2]");
    } else if (const Semigroup* m = std::get_if<Semigroup>(&spec)) {
        if (!(m->alpha >= 1.0 && m->alpha <= 2.0))
            throw ConfigError("Semigroup alpha must lie in [1, 2]");
        if (m->t < 0.0) throw ConfigError("Semigroup time must be nonnegative");
    } else if (const RieszGrad* m = std::get_if<RieszGrad>(&spec)) {
        if (m->axis < 0 || m->axis >= dim)
            throw ConfigError("RieszGrad axis " + std::to_string(m->axis) +
                              " out of range for dimension " + std::to_string(dim));
    } else if (const GevreyWeight* m = std::get_if<GevreyWeight>(&spec)) {
        if (!(m->alpha >= 1.0 && m->alpha <= 2.0))
            throw ConfigError("GevreyWeight alpha must lie in [1, 2]");
        if (m->t < 0.0) throw ConfigError("GevreyWeight time must be nonnegative");
        if (m->rate < 0.0) throw ConfigError("GevreyWeight rate must be nonnegative");
    }
}

} // namespace

cplx evaluate_symbol(const MultiplierSpec& spec, std::span<const double> xi) {
    validate_spec(spec, static_cast<int>(xi.size()));
    if (static_cast<int>(xi.size()) < spec_min_dim(spec))
        throw ConfigError("symbol dimension mismatch");
    return std::visit(SymbolEval{xi}, spec);
}

std::vector<cplx> tabulate_symbol(const MultiplierSpec& spec, const Grid& g) {
    validate_spec(spec, g.dim);
    std::vector<cplx> table(g.size());
    const double dk = g.dk();
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(g.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        int k[3] = {0, 0, 0};
        g.wavenumbers(static_cast<std::size_t>(i), k);
        double xi[3];
        for (int d = 0; d < g.dim; ++d) xi[d] = dk * k[d];
        table[static_cast<std::size_t>(i)] =
            std::visit(SymbolEval{std::span<const double>(xi, static_cast<std::size_t>(g.dim))},
                       spec);
    }
    return table;
}

SpectralField apply_multiplier(const SpectralField& f, const MultiplierSpec& spec) {
    std::vector<cplx> table = tabulate_symbol(spec, f.grid);
    SpectralField out = f;
    kernels::scale_by(std::span<cplx>(out.coef), std::span<const cplx>(table));
    return out;
}

namespace serial {

SpectralField apply_multiplier(const SpectralField& f, const MultiplierSpec& spec) {
    SpectralField out = f;
    const Grid& g = f.grid;
    const double dk = g.dk();
    for (std::size_t i = 0; i < g.size(); ++i) {
        int k[3] = {0, 0, 0};
        g.wavenumbers(i, k);
        double xi[3];
        for (int d = 0; d < g.dim; ++d) xi[d] = dk * k[d];
        out.coef[i] *= evaluate_symbol(
            spec, std::span<const double>(xi, static_cast<std::size_t>(g.dim)));
    }
    return out;
}

} // namespace serial

} // namespace fks
