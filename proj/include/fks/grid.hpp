#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <numbers>

#include "fks/errors.hpp"

namespace fks {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Uniform periodic grid on [0, period)^dim with the same even number of
// points per axis.  Wavenumbers per axis are the signed integers
// k in [-points/2, points/2), stored in FFT order (0,1,...,-points/2,...,-1),
// and physical frequencies are xi = (2*pi/period) * k.
struct Grid {
    int dim = 2;
    int points = 0;
    double period = two_pi;

    std::size_t size() const {
        std::size_t s = 1;
        for (int d = 0; d < dim; ++d) s *= static_cast<std::size_t>(points);
        return s;
    }

    // frequency spacing 2*pi/period
    double dk() const { return two_pi / period; }

    // signed wavenumber for a raw per-axis storage index
    int k_of_index(int idx) const { return idx < points / 2 ? idx : idx - points; }

    // raw storage index for a signed wavenumber (caller keeps |k| <= points/2)
    int index_of_k(int k) const { return k >= 0 ? k : k + points; }

    // decompose a flat row-major index (axis 0 slowest) into signed wavenumbers
    void wavenumbers(std::size_t flat, int* k) const {
        for (int d = dim - 1; d >= 0; --d) {
            int idx = static_cast<int>(flat % static_cast<std::size_t>(points));
            flat /= static_cast<std::size_t>(points);
            k[d] = k_of_index(idx);
        }
    }

    std::size_t flat_of_wavenumbers(const int* k) const {
        std::size_t flat = 0;
        for (int d = 0; d < dim; ++d)
            flat = flat * static_cast<std::size_t>(points) +
                   static_cast<std::size_t>(index_of_k(k[d]));
        return flat;
    }

    bool same_shape(const Grid& other) const {
        return dim == other.dim && points == other.points && period == other.period;
    }
};

// Validates dim in {1,2,3}, even points >= 8, period > 0.
Grid make_grid(int dim, int points_per_axis, double period = two_pi);

// |k|^2, |k|_1 etc. as integers for exact lattice arithmetic
inline std::int64_t k_sq(const int* k, int dim) {
    std::int64_t s = 0;
    for (int d = 0; d < dim; ++d) s += static_cast<std::int64_t>(k[d]) * k[d];
    return s;
}

inline std::int64_t k_l1(const int* k, int dim) {
    std::int64_t s = 0;
    for (int d = 0; d < dim; ++d) s += k[d] >= 0 ? k[d] : -k[d];
    return s;
}

} // namespace fks
