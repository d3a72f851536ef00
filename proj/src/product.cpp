#include "fks/product.hpp"

#include "fks/errors.hpp"
#include "fks/kernels.hpp"
#include "fks/transform.hpp"

namespace fks {

int dealias_cutoff_index(const Grid& g) { return (g.points - 1) / 3; }

double dealias_cutoff_frequency(const Grid& g) {
    return dealias_cutoff_index(g) * g.dk();
}

void apply_dealias_mask(SpectralField& f) {
    const Grid& g = f.grid;
    const int cut = dealias_cutoff_index(g);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(g.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        int k[3] = {0, 0, 0};
        g.wavenumbers(static_cast<std::size_t>(i), k);
        for (int d = 0; d < g.dim; ++d) {
            if (k[d] > cut || k[d] < -cut) {
                f.coef[static_cast<std::size_t>(i)] = cplx{0.0, 0.0};
                break;
            }
        }
    }
}

SpectralField pointwise_product_dealiased(const SpectralField& a, const SpectralField& b) {
    if (!a.grid.same_shape(b.grid))
        throw ConfigError("pointwise product requires matching grids");
    SpectralField am = a;
    SpectralField bm = b;
    apply_dealias_mask(am);
    apply_dealias_mask(bm);
    std::vector<cplx> pa = transform_inverse_complex(am);
    std::vector<cplx> pb = transform_inverse_complex(bm);
    kernels::multiply(std::span<const cplx>(pa), std::span<const cplx>(pb),
                      std::span<cplx>(pa));
    SpectralField out = transform_forward(std::span<const cplx>(pa), a.grid);
    apply_dealias_mask(out);
    return out;
}

SpectralField pointwise_product_padded(const SpectralField& a, const SpectralField& b) {
    if (!a.grid.same_shape(b.grid))
        throw ConfigError("pointwise product requires matching grids");
    const Grid& g = a.grid;
    Grid big = g;
    big.points = 2 * g.points;

    auto embed = [&](const SpectralField& f) {
        SpectralField e(big);
        int k[3] = {0, 0, 0};
        for (std::size_t i = 0; i < g.size(); ++i) {
            g.wavenumbers(i, k);
            e.coef[big.flat_of_wavenumbers(k)] = f.coef[i];
        }
        return e;
    };

    SpectralField ea = embed(a);
    SpectralField eb = embed(b);
    std::vector<cplx> pa = transform_inverse_complex(ea);
    std::vector<cplx> pb = transform_inverse_complex(eb);
    kernels::multiply(std::span<const cplx>(pa), std::span<const cplx>(pb),
                      std::span<cplx>(pa));
    SpectralField prod = transform_forward(std::span<const cplx>(pa), big);

    SpectralField out(g);
    int k[3] = {0, 0, 0};
    for (std::size_t i = 0; i < g.size(); ++i) {
        g.wavenumbers(i, k);
        out.coef[i] = prod.coef[big.flat_of_wavenumbers(k)];
    }
    return out;
}

namespace serial {

SpectralField pointwise_product_dealiased(const SpectralField& a, const SpectralField& b) {
    if (!a.grid.same_shape(b.grid))
        throw ConfigError("pointwise product requires matching grids");
    const Grid& g = a.grid;
    const int cut = dealias_cutoff_index(g);

    auto mask = [&](SpectralField f) {
        int k[3] = {0, 0, 0};
        for (std::size_t i = 0; i < g.size(); ++i) {
            g.wavenumbers(i, k);
            for (int d = 0; d < g.dim; ++d)
                if (k[d] > cut || k[d] < -cut) {
                    f.coef[i] = cplx{0.0, 0.0};
                    break;
                }
        }
        return f;
    };

    SpectralField am = mask(a);
    SpectralField bm = mask(b);
    std::vector<cplx> pa = transform_inverse_complex(am);
    std::vector<cplx> pb = transform_inverse_complex(bm);
    for (std::size_t i = 0; i < pa.size(); ++i) pa[i] *= pb[i];
    SpectralField out = transform_forward(std::span<const cplx>(pa), g);
    return mask(out);
}

} // namespace serial

} // namespace fks
