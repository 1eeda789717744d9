#pragma once

#include "stokes2p/field.hpp"
#include "stokes2p/params.hpp"

#include <vector>

namespace stokes2p {

struct TransmissionSolution {
    FlowField theta; // scalar; per-side smooth parts plus boundary layers
    // Relative size of removed constant-tangential-mode content that the
    // decaying two-phase problem cannot carry (mean normal data and flux
    // defects at xi' = 0).
    double zero_mode_dropped = 0.0;
};

/// Weak two-phase Poisson transmission problem with density-weighted flux:
/// find theta with
///   (rho^{-1} grad theta, grad phi) = (alpha, grad phi)
/// for every continuous decaying test function phi, and prescribed interface
/// jump [[theta]] = beta (one entry per tangential mode). Equivalently, per
/// side  rho^{-1}(theta'' - A^2 theta) = div alpha  with continuity of the
/// weak flux rho^{-1} d_N theta - alpha_N across x_N = 0.
///
/// `alpha` has dim components; its smooth parts may differ per side. Modes of
/// theta are determined up to phase-symmetric constants at xi' = 0; those are
/// normalized to sum to zero. Difference-shape sources whose rates are both
/// resonant with the tangential rate A need a z^2 exp(-A z) profile, which the
/// closed exponential algebra cannot carry: significant resonant terms throw
/// PreconditionError, roundoff-sized ones are dropped.
TransmissionSolution transmission_poisson_solve(const FluidParams& fp,
                                                const FlowField& alpha,
                                                const std::vector<cd>& beta);

/// Pressure functional of the reduced two-phase problem: solves the weak
/// transmission problem with
///   alpha = rho^{-1} mu lap(u) + (rho^{-1} mu - 1) grad(div u),
///   beta  = [[2 mu d_N u_N]] - [[div u]],
/// both built from the structured velocity field u (dim components).
TransmissionSolution compute_reduced_pressure(const FluidParams& fp, const FlowField& u);

struct WeightedHelmholtz {
    FlowField solenoidal; // j with (j, grad phi) = 0 for all continuous phi
    FlowField potential;  // theta, jump-free; f = j + rho^{-1} grad theta
    double zero_mode_dropped = 0.0;
};

/// Density-weighted Helmholtz decomposition f = j + rho^{-1} grad theta via
/// the transmission problem with beta = 0. Reduces to the classical
/// projection when rho_plus == rho_minus.
WeightedHelmholtz helmholtz_project_weighted(const FluidParams& fp, const FlowField& f);

} // namespace stokes2p
