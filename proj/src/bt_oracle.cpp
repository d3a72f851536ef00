#include "fks/bt_oracle.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "fks/errors.hpp"
#include "fks/norms.hpp"

namespace fks {

namespace {

constexpr std::size_t kMaxModes = 4096;

void guard_size(const Grid& g) {
    if (g.size() > kMaxModes)
        throw ConfigError("brute-force pair sum is limited to " + std::to_string(kMaxModes) +
                          " modes, grid has " + std::to_string(g.size()));
}

double inv(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

} // namespace

BtResult bt_apply(const SpectralField& f, const SpectralField& g, double t, double alpha,
                  double p, double p1, double p2) {
    if (!f.grid.same_shape(g.grid))
        throw ConfigError("fields must share one grid");
    guard_size(f.grid);
    if (t < 0.0)
        throw ConfigError("the twist weight needs t >= 0");
    if (!(alpha >= 1.0 && alpha <= 2.0))
        throw ConfigError("diffusion exponent must lie in [1, 2]");
    if (std::abs(inv(p) - inv(p1) - inv(p2)) > 1e-9)
        throw ConfigError("integrability indices must satisfy 1/p1 + 1/p2 = 1/p");

    const Grid& grid = f.grid;
    const std::size_t n = grid.size();
    std::vector<std::array<int, 3>> kvec(n);
    std::vector<std::int64_t> l1(n);
    for (std::size_t i = 0; i < n; ++i) {
        kvec[i] = {0, 0, 0};
        grid.wavenumbers(i, kvec[i].data());
        l1[i] = k_l1(kvec[i].data(), grid.dim);
    }

    const double factor = std::pow(t, 1.0 / alpha) * grid.dk();
    const int half = grid.points / 2;
    BtResult out;
    out.p = p;
    out.p1 = p1;
    out.p2 = p2;
    out.value = SpectralField(grid);
    for (std::size_t i = 0; i < n; ++i) {
        const cplx fi = f.coef[i];
        if (fi == cplx{0.0, 0.0})
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            const cplx gj = g.coef[j];
            if (gj == cplx{0.0, 0.0})
                continue;
            int sum[3] = {0, 0, 0};
            bool in_lattice = true;
            for (int d = 0; d < grid.dim; ++d) {
                sum[d] = kvec[i][d] + kvec[j][d];
                if (sum[d] < -half || sum[d] >= half)
                    in_lattice = false;
            }
            if (!in_lattice)
                continue;
            const std::int64_t defect = k_l1(sum, grid.dim) - l1[i] - l1[j];
            if (defect > 0)
                throw NumericalError("l1 subadditivity violated on the lattice");
            const double weight = std::exp(factor * static_cast<double>(defect));
            out.value.coef[grid.flat_of_wavenumbers(sum)] += weight * fi * gj;
        }
    }

    const double denom = lp_norm(f, p1) * lp_norm(g, p2);
    out.ratio = denom > 0.0 ? lp_norm(out.value, p) / denom : 0.0;
    return out;
}

long long bt_exponent_nonpositive_pairs(const Grid& g) {
    guard_size(g);
    const std::size_t n = g.size();
    std::vector<std::array<int, 3>> kvec(n);
    std::vector<std::int64_t> l1(n);
    for (std::size_t i = 0; i < n; ++i) {
        kvec[i] = {0, 0, 0};
        g.wavenumbers(i, kvec[i].data());
        l1[i] = k_l1(kvec[i].data(), g.dim);
    }
    long long checked = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            int sum[3] = {0, 0, 0};
            for (int d = 0; d < g.dim; ++d)
                sum[d] = kvec[i][d] + kvec[j][d];
            if (k_l1(sum, g.dim) > l1[i] + l1[j])
                throw NumericalError("l1 subadditivity violated on the lattice");
            ++checked;
        }
    }
    return checked;
}

} // namespace fks
