#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "stokes2p/common.hpp"
#include "stokes2p/params.hpp"
#include "stokes2p/profile.hpp"

namespace stokes2p {

// Principal branch of sqrt((rho/mu) lambda + A^2). Re B > 0 whenever lambda
// lies in a sector avoiding the negative real axis. lambda = 0 is rejected:
// every resolvent formula using B assumes a spectral parameter off zero.
cd eval_B(double rho, double mu, cd lambda, double A);

// Boundary-symbol package for one (lambda, A) point: the 2x2 coupling matrix
// that determines the interface amplitudes, its adjugate entries, and the
// determinant in expanded (cancellation-free) form.
struct LopatinskiiData {
    double A = 0;
    cd B_plus, B_minus;
    // System matrix rows: unknowns (i xi'.beta'_+, beta_{+N}).
    cd M11, M12, M21, M22;
    // Adjugate entries: inv(M) = [L11 L12; L21 L22] / detL.
    cd L11, L12, L21, L22;
    cd detL;
    bool near_singular = false;
};

LopatinskiiData make_lopatinskii(const FluidParams& fp, cd lambda, double A);

// M(a) = (e^{-B a} - e^{-A a}) / (B - A), stable through the confluent point
// B = A. This is the profile shape shared by all interface velocity terms.
cd eval_M(double A, cd B, double a);

// Same kernel as a closed-form profile term: coef * M(z).
ProfileTerm m_profile(double A, cd B, cd coef);

// Scalar tangential symbol m(xi', lambda) with a declared multiplier class.
// Declared type 1 means |D^a m| <= C (|lambda|^{1/2}+A)^{s-|a|}; type 2 means
// |D^a m| <= C (|lambda|^{1/2}+A)^s A^{-|a|}. Both classes also require the
// same bound for lambda d/dlambda m.
struct Symbol {
    std::string name;
    int declared_type = 1;       // 1 or 2
    double declared_order = 0;   // s
    std::function<cd(const std::array<double, 2>& xi, cd lambda)> eval;
};

// Product with the composition rule: orders add, type 2 wins.
Symbol symbol_product(const Symbol& a, const Symbol& b);

// The symbols whose classes the solver relies on: generators (xi_j,
// lambda^{1/2}, A, B_pm, (A+B_+)^s), the boundary-matrix entries and
// determinant, and the composite coefficients of the interface solution
// formulas evaluated on unit data slots.
std::vector<Symbol> stock_symbols(const FluidParams& fp);

} // namespace stokes2p
