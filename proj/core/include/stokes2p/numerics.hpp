#pragma once

#include "stokes2p/common.hpp"

#include <vector>

namespace stokes2p {

/// Fornberg finite-difference weights: fills w[0..n-1] with the coefficients
/// of f(x[i]) approximating the m-th derivative at x0 from the n given nodes.
void fd_weights(double x0, const double* x, int n, int m, double* w);

/// Weights for the m-th derivative on a uniform stencil of n nodes with
/// spacing h, evaluated at node `at` (0-based within the stencil).
std::vector<double> fd_weights_uniform(int n, int m, double h, int at);

} // namespace stokes2p
