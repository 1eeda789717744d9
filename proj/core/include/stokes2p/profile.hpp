#pragma once

#include "stokes2p/common.hpp"

#include <vector>

namespace stokes2p {

/// One closed-form exponential profile in the distance z >= 0 from the
/// interface. Two shapes arise from the half-line ODE solves:
///
///   plain:      coef * exp(-kappa1 z)
///   difference: coef * (exp(-kappa1 z) - exp(-kappa2 z)) / (kappa2 - kappa1)
///
/// The difference shape is kept unexpanded because the solution formulas are
/// regular in the limit kappa2 -> kappa1 (it tends to coef * z exp(-kappa1 z))
/// while the two plain terms it splits into are not. All algebra below
/// (derivatives, traces, integrals) is exact and stable in that limit.
struct ProfileTerm {
    cd coef{0.0, 0.0};
    cd kappa1{1.0, 0.0};
    cd kappa2{1.0, 0.0};
    bool diff = false;

    static ProfileTerm plain(cd kappa, cd coef) { return {coef, kappa, kappa, false}; }
    static ProfileTerm difference(cd kappa1, cd kappa2, cd coef) {
        return {coef, kappa1, kappa2, true};
    }
};

/// (1 - exp(-w))/w, series branch for small |w|.
cd phi1m(cd w);

/// Value at distance z >= 0.
cd eval(const ProfileTerm& t, double z);

/// Value at z = 0 (plain: coef, difference: 0).
cd trace(const ProfileTerm& t);

/// d/dz as profile terms (one term for plain, two for difference).
void append_deriv(const ProfileTerm& t, std::vector<ProfileTerm>& out);
std::vector<ProfileTerm> deriv(const std::vector<ProfileTerm>& terms);

/// Trace of d/dz at z = 0.
cd deriv_trace(const ProfileTerm& t);

/// Integral of t over (z, inf) as profile terms (the decaying antiderivative).
/// Requires Re kappa > 0 for every rate of t.
void append_tail_integral(const ProfileTerm& t, std::vector<ProfileTerm>& out);
std::vector<ProfileTerm> tail_integral(const std::vector<ProfileTerm>& terms);

/// exp(-shift*z) * t as a profile term (rates shift, difference gap unchanged).
ProfileTerm exp_shift(const ProfileTerm& t, cd shift);

/// Elementwise complex conjugate view: conj(t(z)) = conj_term(t)(z) for real z.
ProfileTerm conj_term(const ProfileTerm& t);

/// Integral of t(z) exp(-s z) over z in (0, inf). Requires Re(kappa + s) > 0.
cd integrate_infinite(const ProfileTerm& t, cd s);

/// Integral of t1(z) t2(z) over z in (0, inf); bilinear (no conjugation).
cd pair_integral_infinite(const ProfileTerm& t1, const ProfileTerm& t2);

/// Integral of t(z) exp(-s z) over z in (0, L).
cd integrate_finite(const ProfileTerm& t, cd s, double L);

/// Rewrites t(L + w) as profile terms in w >= 0 (exact, at most two terms).
void shift_terms(const ProfileTerm& t, double L, std::vector<ProfileTerm>& out);

/// Integral of t1(z) t2(z) over z in (0, L); bilinear (no conjugation).
/// Decaying rates (Re kappa > 0) are required only when both factors are
/// difference shapes; plain factors may have any rate, including zero.
cd pair_integral_finite(const ProfileTerm& t1, const ProfileTerm& t2, double L);

/// Crude upper bound on sup_z |t(z)|, used for pruning negligible terms.
double amp_bound(const ProfileTerm& t);

/// Per-mode lists of profile terms for a multi-component two-phase field,
/// indexed by (side, component, flattened tangential mode).
class ProfileSet {
  public:
    ProfileSet() = default;
    ProfileSet(int ncomp, int ntang) : ncomp_(ncomp), ntang_(ntang), terms_(2 * ncomp * ntang) {}

    int ncomp() const { return ncomp_; }
    int ntang() const { return ntang_; }
    bool empty() const { return terms_.empty(); }

    std::vector<ProfileTerm>& at(Side s, int c, int t) { return terms_[index(s, c, t)]; }
    const std::vector<ProfileTerm>& at(Side s, int c, int t) const {
        return terms_[index(s, c, t)];
    }

    void add(Side s, int c, int t, const ProfileTerm& term) { at(s, c, t).push_back(term); }

    /// Removes terms whose amplitude bound is below tol * scale.
    void prune(double tol, double scale);

  private:
    size_t index(Side s, int c, int t) const {
        return (static_cast<size_t>(side_index(s)) * ncomp_ + c) * ntang_ + t;
    }
    int ncomp_ = 0;
    int ntang_ = 0;
    std::vector<std::vector<ProfileTerm>> terms_;
};

} // namespace stokes2p
