#include "fks/poisson.hpp"

#include "fks/errors.hpp"
#include "fks/kernels.hpp"
#include "fks/multiplier.hpp"
#include "fks/product.hpp"
#include "fks/transform.hpp"

namespace fks {

AttractantField poisson_attractant(const SpectralField& u) {
    const Grid& g = u.grid;
    AttractantField out;
    out.psi = u;
    const double dk = g.dk();
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(g.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        int k[3] = {0, 0, 0};
        g.wavenumbers(static_cast<std::size_t>(i), k);
        double xi2 = static_cast<double>(k_sq(k, g.dim)) * dk * dk;
        out.psi.coef[static_cast<std::size_t>(i)] =
            xi2 == 0.0 ? cplx{0.0, 0.0} : u.coef[static_cast<std::size_t>(i)] / xi2;
    }
    out.grad.reserve(static_cast<std::size_t>(g.dim));
    for (int d = 0; d < g.dim; ++d)
        out.grad.push_back(apply_multiplier(u, RieszGrad{d}));
    return out;
}

namespace {

// shared pipeline: compute -div(u grad psi) with a caller-supplied product
template <typename Product>
SpectralField nonlinear_common(const SpectralField& u, Product&& product) {
    const Grid& g = u.grid;
    SpectralField out(g);
    const double dk = g.dk();
    for (int d = 0; d < g.dim; ++d) {
        SpectralField grad_d = apply_multiplier(u, RieszGrad{d});
        SpectralField flux = product(u, grad_d);
        // accumulate -i xi_d * flux
        const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(g.size());
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            int k[3] = {0, 0, 0};
            g.wavenumbers(static_cast<std::size_t>(i), k);
            out.coef[static_cast<std::size_t>(i)] +=
                cplx{0.0, -dk * k[d]} * flux.coef[static_cast<std::size_t>(i)];
        }
    }
    return out;
}

} // namespace

SpectralField nonlinear_term(const SpectralField& u, bool dealias) {
    if (dealias)
        return nonlinear_common(u, [](const SpectralField& a, const SpectralField& b) {
            return pointwise_product_dealiased(a, b);
        });
    return nonlinear_common(u, [](const SpectralField& a, const SpectralField& b) {
        return pointwise_product_padded(a, b);
    });
}

namespace serial {

SpectralField nonlinear_term(const SpectralField& u, bool dealias) {
    const Grid& g = u.grid;
    SpectralField out(g);
    const double dk = g.dk();
    for (int d = 0; d < g.dim; ++d) {
        SpectralField grad_d = serial::apply_multiplier(u, RieszGrad{d});
        SpectralField flux = dealias ? serial::pointwise_product_dealiased(u, grad_d)
                                     : pointwise_product_padded(u, grad_d);
        for (std::size_t i = 0; i < g.size(); ++i) {
            int k[3] = {0, 0, 0};
            g.wavenumbers(i, k);
            out.coef[i] += cplx{0.0, -dk * k[d]} * flux.coef[i];
        }
    }
    return out;
}

} // namespace serial

} // namespace fks
