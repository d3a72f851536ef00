#include "fks/paraproduct.hpp"

#include "fks/errors.hpp"
#include "fks/product.hpp"

namespace fks {

ParaproductParts paraproduct(const SpectralField& f, const SpectralField& g,
                             const DyadicFilterBank& bank) {
    if (!f.grid.same_shape(g.grid) || !f.grid.same_shape(bank.grid))
        throw ConfigError("paraproduct requires matching grids");

    ParaproductParts parts{SpectralField(f.grid), SpectralField(f.grid),
                           SpectralField(f.grid)};

    // cache the blocks of both factors once
    std::vector<SpectralField> df, dg;
    df.reserve(static_cast<std::size_t>(bank.j_max - bank.j_min + 1));
    dg.reserve(df.capacity());
    for (int j = bank.j_min; j <= bank.j_max; ++j) {
        df.push_back(dyadic_block(f, j, bank));
        dg.push_back(dyadic_block(g, j, bank));
    }
    auto blk = [&](const std::vector<SpectralField>& v, int j) -> const SpectralField& {
        return v[static_cast<std::size_t>(j - bank.j_min)];
    };

    for (int j = bank.j_min; j <= bank.j_max; ++j) {
        SpectralField sf = low_pass(f, j - 1, bank);
        SpectralField sg = low_pass(g, j - 1, bank);
        SpectralField th = pointwise_product_dealiased(sf, blk(dg, j));
        SpectralField tl = pointwise_product_dealiased(sg, blk(df, j));
        for (std::size_t i = 0; i < th.coef.size(); ++i) {
            parts.low_high.coef[i] += th.coef[i];
            parts.high_low.coef[i] += tl.coef[i];
        }
        for (int jp = j - 1; jp <= j + 1; ++jp) {
            if (!bank.in_range(jp)) continue;
            SpectralField r = pointwise_product_dealiased(blk(df, j), blk(dg, jp));
            for (std::size_t i = 0; i < r.coef.size(); ++i)
                parts.resonant.coef[i] += r.coef[i];
        }
    }
    return parts;
}

} // namespace fks
