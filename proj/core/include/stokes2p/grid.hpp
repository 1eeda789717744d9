#pragma once

#include "stokes2p/common.hpp"

#include <vector>

namespace stokes2p {

/// Discretization of the slab [0,L)^{N-1} x [-L_N, L_N] around the interface
/// {x_N = 0}. Tangential directions are periodic with `tang_modes` equispaced
/// points each; the normal direction carries `normal_cells` cells so that the
/// interface is a grid plane and each half space holds normal_cells/2 cells.
///
/// Normal samples are indexed by distance from the interface: on the upper
/// side index i corresponds to x_N = +i*normal_spacing(), on the lower side
/// to x_N = -i*normal_spacing().
struct PeriodicGrid {
    int dim = 2;               // ambient dimension N, 2 or 3
    int tang_modes = 256;      // points/modes per tangential direction (power of two)
    double tang_period = 2.0 * pi;
    double half_height = 8.0;  // L_N
    int normal_cells = 256;    // cells across [-L_N, L_N] (power of two)

    int tang_dims() const { return dim - 1; }
    int tang_count() const;                    // total tangential modes
    int half_count() const { return normal_cells / 2 + 1; }
    double tang_spacing() const { return tang_period / tang_modes; }
    double normal_spacing() const { return 2.0 * half_height / normal_cells; }

    /// Signed x_N of normal sample i on the given side.
    double xn(Side s, int i) const { return side_sign(s) * i * normal_spacing(); }

    /// Signed integer frequency of tangential bin k (FFT ordering).
    int freq_of_bin(int k) const { return k < tang_modes / 2 ? k : k - tang_modes; }

    /// Tangential wave vector xi' of flattened mode index t (size dim-1).
    std::vector<double> xi_tang(int t) const;

    /// |xi'| of flattened mode index t.
    double xi_abs(int t) const;

    /// Normal frequency of x_N bin kn for the periodic extension of period 2*L_N.
    double xi_normal(int kn) const {
        int ks = kn < normal_cells / 2 ? kn : kn - normal_cells;
        return ks * pi / half_height;
    }

    /// Flattened tangential index from per-direction bin indices.
    int tang_index(int k1, int k2 = 0) const;

    /// Inverse of tang_index.
    void tang_bins(int t, int& k1, int& k2) const;

    bool operator==(const PeriodicGrid&) const = default;
};

/// Validates grid invariants; throws ConfigError on violation.
void validate(const PeriodicGrid& g);

/// Default desk-scale grid for the given dimension.
PeriodicGrid default_grid(int dim);

} // namespace stokes2p
