#pragma once

#include "stokes2p/common.hpp"

namespace stokes2p {

/// Constant densities and viscosities of the two phases.
struct FluidParams {
    double rho_plus = 1.0;
    double rho_minus = 1.0;
    double mu_plus = 1.0;
    double mu_minus = 1.0;

    double rho(Side s) const { return s == Side::plus ? rho_plus : rho_minus; }
    double mu(Side s) const { return s == Side::plus ? mu_plus : mu_minus; }

    bool operator==(const FluidParams&) const = default;
};

/// Validates positivity; throws ConfigError on violation.
void validate(const FluidParams& p);

/// A spectral parameter lambda together with the sector
///   Sigma = { |arg z| <= pi - eps, |z| >= lambda0 }
/// it is required to lie in. Constructed via make_sector_point, which enforces
/// membership.
struct SectorPoint {
    cd lambda{1.0, 0.0};
    double eps = pi / 4.0;  // sector opening parameter, 0 < eps < pi/2
    double lambda0 = 0.0;   // lower bound on |lambda|
};

/// Validates sector membership of lambda; throws std::domain_error if lambda
/// lies outside Sigma_{eps,lambda0} and ConfigError if the sector parameters
/// themselves are out of range.
SectorPoint make_sector_point(cd lambda, double eps, double lambda0);

/// Point on a sector boundary ray: lambda = r * exp(+-i(pi - eps)), r > 0.
SectorPoint sector_ray_point(double eps, double lambda0, double r, int sign);

} // namespace stokes2p
