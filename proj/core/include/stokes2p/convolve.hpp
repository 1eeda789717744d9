#pragma once

#include "stokes2p/profile.hpp"

#include <vector>

namespace stokes2p {

/// One-dimensional convolution kernel coef * exp(-rate |a|), multiplied by
/// sign(a) when odd. Kernels of this shape are the partial inverse Fourier
/// transforms, in the normal frequency, of the constant-coefficient Stokes
/// resolvent and Poisson symbols at a fixed tangential frequency, so applying
/// those operators to boundary-layer data reduces to convolving these kernels
/// against profile terms on the two half lines.
struct PlainKernel {
    cd rate{1.0, 0.0};
    cd coef{0.0, 0.0};
    bool odd = false;
};

/// Profile term lists of one scalar quantity on the two half lines, each in
/// the distance z = |x_N| from the interface.
struct ModeTerms {
    std::vector<ProfileTerm> plus;
    std::vector<ProfileTerm> minus;

    std::vector<ProfileTerm>& side(Side s) { return s == Side::plus ? plus : minus; }
    const std::vector<ProfileTerm>& side(Side s) const {
        return s == Side::plus ? plus : minus;
    }
    bool empty() const { return plus.empty() && minus.empty(); }
};

/// Appends the profile terms of  int_{side src} K(x - y) p(|y|) dy  evaluated
/// for x on side `eval`, as functions of z = |x|. Exact closed forms: the
/// half-line pieces produce only plain and difference shapes, and coincident
/// rates are kept in difference form rather than divided out. A difference
/// source with exactly equal rates (the z e^{-kappa z} shape) is supported as
/// long as the kernel rate differs from the source rate.
void convolve_term(const PlainKernel& k, Side src, const ProfileTerm& p, Side eval,
                   std::vector<ProfileTerm>& out);

/// Convolves the kernel against every term of a two-sided source and appends
/// to both sides of `out`.
void convolve_mode(const PlainKernel& k, const ModeTerms& src, ModeTerms& out);

/// (d^2/dz^2 - a^2) applied termwise; exact (difference shapes map to a
/// difference plus a plain term, uniformly in the rate gap).
void append_helmholtz_op(const ProfileTerm& t, cd a, std::vector<ProfileTerm>& out);
std::vector<ProfileTerm> helmholtz_op(const std::vector<ProfileTerm>& terms, cd a);

/// Termwise scaling / accumulation helpers for per-mode term lists.
void append_scaled(const std::vector<ProfileTerm>& terms, cd factor,
                   std::vector<ProfileTerm>& out);
void append_scaled(const ModeTerms& src, cd factor, ModeTerms& out);

/// Interface trace and signed normal-derivative trace of a term list
/// (d/dx_N = side_sign(s) d/dz).
cd terms_trace(const std::vector<ProfileTerm>& terms);
cd terms_deriv_trace(Side s, const std::vector<ProfileTerm>& terms);

/// Combines terms with identical rate pairs and drops terms whose amplitude
/// bound is below rel_tol times the largest in the list.
void merge_terms(std::vector<ProfileTerm>& terms, double rel_tol);
void merge_mode(ModeTerms& m, double rel_tol);

/// Whole-line solution, at one tangential mode xi' != 0, of
///   div V = g,   V decaying,
/// for scalar profile data g via the Poisson kernels
///   V_j = -F^{-1}[i xi_j |xi|^{-2} F g],  V_N = -F^{-1}[i xi_N |xi|^{-2} F g].
/// Returns dim = xi_tang.size() + 1 velocity components.
std::vector<ModeTerms> divergence_lift_profiles(const std::vector<double>& xi_tang,
                                                const ModeTerms& g);

struct ResolventProfileResult {
    std::vector<ModeTerms> velocity; // dim components
    ModeTerms pressure;
};

/// Whole-line application, at one tangential mode xi' != 0, of a single
/// phase's Stokes resolvent and associated pressure to a vector right-hand
/// side given as profile terms: the output solves
///   rho lambda psi - mu (d^2/dz^2 - A^2) psi + (i xi', d/dx_N) phi = rhs,
///   i xi' . psi' + d/dx_N psi_N = 0
/// on the whole line with decay, with no interface conditions imposed. The
/// right-hand side may be discontinuous across x_N = 0; psi and its first
/// derivative come out continuous.
ResolventProfileResult apply_resolvent_profiles(double rho, double mu, cd lambda,
                                                const std::vector<double>& xi_tang,
                                                const std::vector<ModeTerms>& rhs);

} // namespace stokes2p
