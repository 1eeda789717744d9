#pragma once

#include "stokes2p/field.hpp"

namespace stokes2p {

/// Lq and Sobolev-type norms of a sampled field. Component vectors enter via
/// their Euclidean magnitude; derivative norms aggregate all first (resp.
/// second) partials the same way.
struct NormReport {
    double q = 2.0;
    double lq = 0.0;      // || f ||_q
    double grad_lq = 0.0; // || |grad f| ||_q
    double hess_lq = 0.0; // || |grad^2 f| ||_q
    double w1 = 0.0;      // (lq^q + grad^q)^{1/q}
    double w2 = 0.0;      // (lq^q + grad^q + hess^q)^{1/q}
};

/// Trapezoid Lq norm over both half slabs of a physically sampled field.
double lq_norm(const TwoPhaseField& f, double q);

/// Full norm report on a sampled field: tangential derivatives are computed
/// spectrally, normal ones by one-sided-at-edges sixth-order differences
/// within each phase.
NormReport discrete_norms(const TwoPhaseField& f, double q);

/// L2 norm of the analytic expression of a structured field over the box.
/// The smooth global part is integrated by the trapezoid rule on the grid;
/// boundary-layer self terms and layer/global cross terms use closed forms,
/// so stiff layers are measured accurately at any lambda.
double structured_l2(const FlowField& f);

/// sqrt(sum of squared L2 norms of all order-`order` partial derivatives),
/// order in {0, 1, 2}.
double structured_deriv_l2(const FlowField& f, int order);

} // namespace stokes2p
