#pragma once

#include "stokes2p/convolve.hpp"
#include "stokes2p/field.hpp"
#include "stokes2p/params.hpp"

namespace stokes2p {

struct WeakLambdaSolution {
    FlowField g; // scalar: shared smooth part plus per-mode interface layers
    double zero_mode_dropped = 0.0;
};

/// Solves the lambda-dependent weak transmission problem whose strong form is
///   (lambda - lap) g = div f  on both half spaces,
///   [[g]] = h,   [[d/dx_N g - f_N]] = 0,
/// with decay. The smooth part comes from the whole-space multiplier
/// <i xi, f>/(lambda + |xi|^2); the jump is carried by the layers
/// (+-h/2) e^{-B |x_N|}, B = sqrt(lambda + A^2), whose flux is continuous.
/// A jump entry on the constant tangential mode admits no decaying divergence
/// preimage downstream and is projected out and reported.
WeakLambdaSolution solve_weak_lambda(const SpectralBoxField& f,
                                     const std::vector<cd>& h_jump, cd lambda);

struct FlatStokesSolution {
    FlowField velocity; // dim components
    FlowField pressure; // scalar
    double zero_mode_dropped = 0.0;
    /// min over phases of Re sqrt(rho lambda / mu) * L_N; below 20 the
    /// slowest boundary layer is no longer negligible at the slab edge.
    double decay_margin = 0.0;
};

/// Two-phase Stokes resolvent with a flat interface:
///   rho lambda u - Div(mu D(u)) + grad theta = rho f,   div u = g,
///   [[(mu D(u) - theta I) n0]] = h,   [[u]] = 0,      n0 = -e_N.
///
/// f must be continuous across the interface (one box spectrum); g may jump
/// (shared smooth part plus per-mode layers); h holds the per-mode stress
/// jumps laid out [component][tangential mode].
///
/// Pipeline: divergence lift V with div V = g, phase-wise whole-line
/// resolvent applied to rho f - rho lambda V + Div(mu D(V)) (smooth part by
/// box multipliers, layer part by exact kernel convolution), then an
/// interface correction restoring the stress and velocity jump conditions.
FlatStokesSolution solve_flat_stokes(const FluidParams& fp, cd lambda,
                                     const SpectralBoxField& f, const FlowField& g,
                                     const std::vector<cd>& h_jump);

struct ReducedFlatSolution {
    FlowField velocity;
    FlowField pressure;   // pressure of the lifted Stokes system
    FlowField divergence; // g manufactured by the weak lambda problem
    double zero_mode_dropped = 0.0;
    double decay_margin = 0.0;
};

/// Reduced Stokes resolvent: div u is not prescribed but manufactured from
/// the data by the weak lambda problem with jump <[[h]], n0> = -[[h_N]];
/// the flat solver then runs with that divergence. The returned pressure
/// gradient coincides with the gradient of the reduced pressure functional
/// of the velocity.
ReducedFlatSolution solve_reduced_flat(const FluidParams& fp, cd lambda,
                                       const SpectralBoxField& f,
                                       const std::vector<cd>& h_jump);

} // namespace stokes2p
