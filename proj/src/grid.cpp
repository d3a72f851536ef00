#include "fks/grid.hpp"

#include <string>

namespace fks {

Grid make_grid(int dim, int points_per_axis, double period) {
    if (dim < 1 || dim > 3)
        throw ConfigError("grid dimension must be 1, 2 or 3, got " + std::to_string(dim));
    if (points_per_axis < 8)
        throw ConfigError("grid needs at least 8 points per axis, got " +
                          std::to_string(points_per_axis));
    if (points_per_axis % 2 != 0)
        throw ConfigError("points per axis must be even, got " +
                          std::to_string(points_per_axis));
    if (!(period > 0.0))
        throw ConfigError("grid period must be positive");
    Grid g;
    g.dim = dim;
    g.points = points_per_axis;
    g.period = period;
    return g;
}

} // namespace fks
