#include "stokes2p/params.hpp"

#include <cmath>
#include <string>

namespace stokes2p {

void validate(const FluidParams& p) {
    if (!(p.rho_plus > 0.0) || !(p.rho_minus > 0.0))
        throw ConfigError("fluid densities must be positive");
    if (!(p.mu_plus > 0.0) || !(p.mu_minus > 0.0))
        throw ConfigError("fluid viscosities must be positive");
}

SectorPoint make_sector_point(cd lambda, double eps, double lambda0) {
    if (!(eps > 0.0) || !(eps < pi / 2.0))
        throw ConfigError("sector eps must lie in (0, pi/2), got " + std::to_string(eps));
    if (lambda0 < 0.0)
        throw ConfigError("sector lambda0 must be nonnegative");
    const double r = std::abs(lambda);
    // Tiny slack so points generated exactly on the boundary rays pass.
    const double slack = 1e-12 * (1.0 + r);
    if (r < lambda0 * (1.0 - 1e-12) || r == 0.0)
        throw std::domain_error("lambda outside sector: |lambda| = " + std::to_string(r) +
                                " below lambda0 = " + std::to_string(lambda0));
    if (std::abs(std::arg(lambda)) > pi - eps + slack)
        throw std::domain_error("lambda outside sector: |arg lambda| = " +
                                std::to_string(std::abs(std::arg(lambda))) +
                                " exceeds pi - eps = " + std::to_string(pi - eps));
    return SectorPoint{lambda, eps, lambda0};
}

SectorPoint sector_ray_point(double eps, double lambda0, double r, int sign) {
    const double phi = (sign >= 0 ? 1.0 : -1.0) * (pi - eps);
    return make_sector_point(std::polar(r, phi), eps, lambda0);
}

} // namespace stokes2p
