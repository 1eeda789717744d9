#include "stokes2p/grid.hpp"

#include <cmath>

namespace stokes2p {

namespace {
bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
} // namespace

int PeriodicGrid::tang_count() const {
    return dim == 2 ? tang_modes : tang_modes * tang_modes;
}

std::vector<double> PeriodicGrid::xi_tang(int t) const {
    std::vector<double> xi(static_cast<size_t>(dim - 1));
    int k1 = 0, k2 = 0;
    tang_bins(t, k1, k2);
    const double unit = 2.0 * pi / tang_period;
    xi[0] = freq_of_bin(k1) * unit;
    if (dim == 3) xi[1] = freq_of_bin(k2) * unit;
    return xi;
}

double PeriodicGrid::xi_abs(int t) const {
    int k1 = 0, k2 = 0;
    tang_bins(t, k1, k2);
    const double unit = 2.0 * pi / tang_period;
    const double a = freq_of_bin(k1) * unit;
    if (dim == 2) return std::abs(a);
    const double b = freq_of_bin(k2) * unit;
    return std::hypot(a, b);
}

int PeriodicGrid::tang_index(int k1, int k2) const {
    return dim == 2 ? k1 : k1 * tang_modes + k2;
}

void PeriodicGrid::tang_bins(int t, int& k1, int& k2) const {
    if (dim == 2) {
        k1 = t;
        k2 = 0;
    } else {
        k1 = t / tang_modes;
        k2 = t % tang_modes;
    }
}

void validate(const PeriodicGrid& g) {
    if (g.dim != 2 && g.dim != 3)
        throw ConfigError("grid.dim must be 2 or 3, got " + std::to_string(g.dim));
    if (!power_of_two(g.tang_modes) || g.tang_modes < 4)
        throw ConfigError("grid.tang_modes must be a power of two >= 4, got " +
                          std::to_string(g.tang_modes));
    if (!power_of_two(g.normal_cells) || g.normal_cells < 8)
        throw ConfigError("grid.normal_cells must be a power of two >= 8, got " +
                          std::to_string(g.normal_cells));
    if (!(g.tang_period > 0.0))
        throw ConfigError("grid.tang_period must be positive");
    if (!(g.half_height > 0.0))
        throw ConfigError("grid.half_height must be positive");
}

PeriodicGrid default_grid(int dim) {
    PeriodicGrid g;
    g.dim = dim;
    g.tang_modes = dim == 2 ? 256 : 32;
    g.tang_period = 2.0 * pi;
    g.half_height = 8.0;
    g.normal_cells = 256;
    validate(g);
    return g;
}

} // namespace stokes2p
