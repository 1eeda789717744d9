#pragma once

#include "stokes2p/field.hpp"
#include "stokes2p/params.hpp"

#include <vector>

namespace stokes2p {

/// Closed-form solution of the per-mode two-phase resolvent ODE system on the
/// line, coupled through the interface at x_N = 0:
///
///   (rho lam + mu A^2 - mu d_N^2) u_J + (grad theta)_J = 0   on both rays,
///   i xi'.u' + d_N u_N = 0                                   on both rays,
///   [[mu (i xi_j u_N + d_N u_j)]] = -h_jump_j,
///   [[2 mu d_N u_N - theta]]      = -h_jump_N,
///   [[u_J]]                       = k_jump_J,
///
/// with decay as |x_N| -> infinity ([[.]] = plus trace - minus trace; the
/// minus signs on h come from the downward interface normal). In the distance
/// z = |x_N| the solution per side reads
///
///   u_J   = diff_J (e^{-A z} - e^{-B z})/(B - A) + exp_J e^{-B z},
///   theta = pres e^{-A z},
///
/// where A = |xi'| and B = sqrt((rho/mu) lam + A^2). All coefficients stay
/// finite in the confluent limit B -> A.
struct InterfaceModeSolution {
    int dim = 2;
    double A = 0.0;
    cd B_plus, B_minus;
    std::vector<cd> diff_plus, exp_plus;   // dim entries each
    std::vector<cd> diff_minus, exp_minus;
    cd pres_plus, pres_minus;

    cd B(Side s) const { return s == Side::plus ? B_plus : B_minus; }

    /// Velocity profile terms of component comp on side s (in z = |x_N|).
    std::vector<ProfileTerm> velocity_terms(Side s, int comp) const;

    /// Pressure profile term on side s.
    ProfileTerm pressure_term(Side s) const;

    cd velocity(Side s, int comp, double z) const;
    cd pressure(Side s, double z) const;
};

/// Solves the interface system for one tangential mode. xi_tang has dim-1
/// entries; h_jump and k_jump have dim entries ordered (tangential...,
/// normal). Requires lambda != 0. A tangentially constant mode (A = 0) admits
/// no decaying solution with normal data, so h_jump_N and k_jump_N must
/// vanish there (relative to the data scale); PreconditionError otherwise.
InterfaceModeSolution assemble_mode_system(const FluidParams& fp, cd lambda,
                                           const std::vector<double>& xi_tang,
                                           const std::vector<cd>& h_jump,
                                           const std::vector<cd>& k_jump);

/// Interface correction fields over all tangential modes of a grid.
struct InterfaceCorrection {
    FlowField velocity; // dim components, pure profile part
    FlowField pressure; // 1 component
    /// Largest normal-data magnitude projected off the A = 0 mode (relative
    /// to the data scale); zero when the data was compatible.
    double zero_mode_dropped = 0.0;
};

/// Applies assemble_mode_system mode by mode. h_jump and k_jump are flat
/// [component * tang_count + mode] arrays of interface jumps as produced by
/// jump(). Incompatible normal data on the A = 0 mode is projected out and
/// its relative magnitude reported instead of throwing.
InterfaceCorrection solve_interface_correction(const PeriodicGrid& g, const FluidParams& fp,
                                               cd lambda, const std::vector<cd>& h_jump,
                                               const std::vector<cd>& k_jump);

} // namespace stokes2p
