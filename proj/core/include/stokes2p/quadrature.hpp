#pragma once

#include "stokes2p/common.hpp"

#include <functional>

namespace stokes2p {

struct QuadResult {
    cd value{};
    double abs_error = 0.0;
    int evaluations = 0;
    bool converged = false;
};

/// Globally adaptive Gauss-Kronrod 7/15 quadrature of a complex integrand on
/// [a, b]: intervals are bisected worst-error-first until the summed error
/// estimate drops below max(abs_tol, rel_tol * |integral|).
QuadResult adaptive_gk15(const std::function<cd(double)>& f, double a, double b,
                         double abs_tol, double rel_tol = 0.0, int max_subdiv = 4000);

/// Integral over (a, infinity) of an integrand decaying on the length scale
/// 1/decay_rate: geometric panels are appended until the last panel falls
/// below the tolerance, each panel integrated adaptively. For oscillatory
/// integrands pass the oscillation wavenumber so initial panels resolve it.
QuadResult integrate_to_infinity(const std::function<cd(double)>& f, double a,
                                 double decay_rate, double abs_tol,
                                 double osc_wavenumber = 0.0);

} // namespace stokes2p
