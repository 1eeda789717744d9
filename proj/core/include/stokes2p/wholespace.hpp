#pragma once

#include "stokes2p/field.hpp"

namespace stokes2p {

/// Periodic right inverse of the divergence: V_j = -i xi_j g / |xi|^2.
/// div V = g exactly in the spectral representation. The input must have
/// zero mean (the constant bin admits no divergence preimage); a mean above
/// 1e-12 relative to the coefficient scale throws PreconditionError.
SpectralBoxField solve_divergence(const SpectralBoxField& g);

struct ResolventSolution {
    SpectralBoxField velocity;
    SpectralBoxField pressure;
};

/// Whole-space Stokes resolvent with constant coefficients:
///   rho lambda psi - mu lap psi + grad phi = f,  div psi = 0.
/// psi = (f - xi <xi,f>/|xi|^2) / (rho lambda + mu |xi|^2) per mode,
/// phi = -<i xi, f>/|xi|^2, zero-mean normalized. The constant bin carries
/// psi_0 = f_0/(rho lambda).
ResolventSolution solve_wholespace_resolvent(const SpectralBoxField& f, cd lambda,
                                             double rho, double mu);

/// Weak solution of (lambda - lap) phi = div f: phi = <i xi, f>/(lambda + |xi|^2).
SpectralBoxField solve_heat_weak(const SpectralBoxField& f, cd lambda);

struct HelmholtzParts {
    SpectralBoxField solenoidal;
    SpectralBoxField gradient;
};

/// Uniform-density Helmholtz decomposition u = v + grad q with div v = 0;
/// returns v and grad q. The constant bin stays in the solenoidal part.
HelmholtzParts helmholtz_project(const SpectralBoxField& u);

/// Coefficient l2 norm (Parseval proxy of the box L2 norm up to the fixed
/// volume factor); handy for relative spectral checks.
double coef_l2(const SpectralBoxField& f);

} // namespace stokes2p
