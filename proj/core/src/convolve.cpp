#include "stokes2p/convolve.hpp"

#include <algorithm>
#include <cmath>

namespace stokes2p {

namespace {

// Convolution of coef exp(-rate|a|) (times sign(a) when odd) against a plain
// source c exp(-sigma y) supported on one half line. On the source's own side
// the split at y = x_N gives a difference shape plus a plain tail; on the far
// side only the exponential of the kernel rate survives. All shapes stay
// regular when the source rate meets the kernel rate.
void convolve_plain(const PlainKernel& k, Side src, cd sigma, cd c, Side eval,
                    std::vector<ProfileTerm>& out) {
    const cd amp = k.coef * c;
    if (src == eval) {
        const double s1 = k.odd ? side_sign(src) : 1.0;
        const double s2 = k.odd ? -side_sign(src) : 1.0;
        out.push_back(ProfileTerm::difference(sigma, k.rate, s1 * amp));
        out.push_back(ProfileTerm::plain(sigma, s2 * amp / (k.rate + sigma)));
    } else {
        const double s = k.odd ? side_sign(eval) : 1.0;
        out.push_back(ProfileTerm::plain(k.rate, s * amp / (k.rate + sigma)));
    }
}

// Source c z exp(-sigma z): differentiate the plain-source result in -sigma.
// Requires the kernel rate away from sigma; otherwise the result would need a
// z^2 exp(-sigma z) shape, which the pipeline never produces.
void convolve_confluent(const PlainKernel& k, Side src, cd sigma, cd c, Side eval,
                        std::vector<ProfileTerm>& out) {
    const cd gap = k.rate - sigma;
    const double scale = std::max(std::abs(k.rate), std::abs(sigma));
    if (std::abs(gap) <= 1e-9 * scale)
        throw PreconditionError("convolve_term: kernel rate coincides with the rate of a "
                                "z exp(-kz) source; z^2 profiles are not representable");
    const cd amp = k.coef * c;
    if (src == eval) {
        const double s1 = k.odd ? side_sign(src) : 1.0;
        const double s2 = k.odd ? -side_sign(src) : 1.0;
        out.push_back(ProfileTerm::difference(sigma, sigma, s1 * amp / gap));
        out.push_back(ProfileTerm::difference(sigma, k.rate, -s1 * amp / gap));
        const cd den = k.rate + sigma;
        out.push_back(ProfileTerm::difference(sigma, sigma, s2 * amp / den));
        out.push_back(ProfileTerm::plain(sigma, s2 * amp / (den * den)));
    } else {
        const double s = k.odd ? side_sign(eval) : 1.0;
        const cd den = k.rate + sigma;
        out.push_back(ProfileTerm::plain(k.rate, s * amp / (den * den)));
    }
}

} // namespace

void convolve_term(const PlainKernel& k, Side src, const ProfileTerm& p, Side eval,
                   std::vector<ProfileTerm>& out) {
    if (!p.diff) {
        convolve_plain(k, src, p.kappa1, p.coef, eval, out);
        return;
    }
    const cd gap = p.kappa2 - p.kappa1;
    const double scale = std::max(std::abs(p.kappa1), std::abs(p.kappa2));
    if (std::abs(gap) > 1e-9 * scale) {
        convolve_plain(k, src, p.kappa1, p.coef / gap, eval, out);
        convolve_plain(k, src, p.kappa2, -p.coef / gap, eval, out);
    } else {
        convolve_confluent(k, src, 0.5 * (p.kappa1 + p.kappa2), p.coef, eval, out);
    }
}

void convolve_mode(const PlainKernel& k, const ModeTerms& src, ModeTerms& out) {
    for (Side ss : both_sides)
        for (const ProfileTerm& t : src.side(ss))
            for (Side es : both_sides)
                convolve_term(k, ss, t, es, out.side(es));
}

void append_helmholtz_op(const ProfileTerm& t, cd a, std::vector<ProfileTerm>& out) {
    if (!t.diff) {
        out.push_back(ProfileTerm::plain(t.kappa1, t.coef * (t.kappa1 * t.kappa1 - a * a)));
        return;
    }
    out.push_back(ProfileTerm::difference(t.kappa1, t.kappa2,
                                          t.coef * (t.kappa1 * t.kappa1 - a * a)));
    out.push_back(ProfileTerm::plain(t.kappa2, -t.coef * (t.kappa1 + t.kappa2)));
}

std::vector<ProfileTerm> helmholtz_op(const std::vector<ProfileTerm>& terms, cd a) {
    std::vector<ProfileTerm> out;
    out.reserve(2 * terms.size());
    for (const ProfileTerm& t : terms)
        append_helmholtz_op(t, a, out);
    return out;
}

void append_scaled(const std::vector<ProfileTerm>& terms, cd factor,
                   std::vector<ProfileTerm>& out) {
    for (ProfileTerm t : terms) {
        t.coef *= factor;
        out.push_back(t);
    }
}

void append_scaled(const ModeTerms& src, cd factor, ModeTerms& out) {
    append_scaled(src.plus, factor, out.plus);
    append_scaled(src.minus, factor, out.minus);
}

cd terms_trace(const std::vector<ProfileTerm>& terms) {
    cd v = 0.0;
    for (const ProfileTerm& t : terms)
        v += trace(t);
    return v;
}

cd terms_deriv_trace(Side s, const std::vector<ProfileTerm>& terms) {
    cd v = 0.0;
    for (const ProfileTerm& t : terms)
        v += deriv_trace(t);
    return side_sign(s) * v;
}

void merge_terms(std::vector<ProfileTerm>& terms, double rel_tol) {
    std::vector<ProfileTerm> merged;
    for (const ProfileTerm& t : terms) {
        bool found = false;
        for (ProfileTerm& m : merged) {
            if (m.diff != t.diff)
                continue;
            if ((m.kappa1 == t.kappa1 && m.kappa2 == t.kappa2) ||
                (m.diff && m.kappa1 == t.kappa2 && m.kappa2 == t.kappa1)) {
                m.coef += t.coef;
                found = true;
                break;
            }
        }
        if (!found)
            merged.push_back(t);
    }
    double scale = 0.0;
    for (const ProfileTerm& m : merged)
        scale = std::max(scale, amp_bound(m));
    terms.clear();
    for (const ProfileTerm& m : merged)
        if (amp_bound(m) > rel_tol * scale)
            terms.push_back(m);
}

void merge_mode(ModeTerms& m, double rel_tol) {
    merge_terms(m.plus, rel_tol);
    merge_terms(m.minus, rel_tol);
}

namespace {

double tang_norm(const std::vector<double>& xi_tang) {
    double a2 = 0.0;
    for (double x : xi_tang)
        a2 += x * x;
    return std::sqrt(a2);
}

void accumulate(PlainKernel k, cd factor, const ModeTerms& src, ModeTerms& out) {
    k.coef *= factor;
    convolve_mode(k, src, out);
}

} // namespace

std::vector<ModeTerms> divergence_lift_profiles(const std::vector<double>& xi_tang,
                                                const ModeTerms& g) {
    const int dim = static_cast<int>(xi_tang.size()) + 1;
    const double A = tang_norm(xi_tang);
    if (A <= 0.0)
        throw PreconditionError("divergence_lift_profiles: tangential frequency must be nonzero");
    std::vector<ModeTerms> V(dim);
    const PlainKernel k_pois{cd(A, 0.0), cd(1.0 / (2.0 * A), 0.0), false};
    const PlainKernel k_sign{cd(A, 0.0), cd(0.5, 0.0), true};
    for (int j = 0; j + 1 < dim; ++j)
        accumulate(k_pois, -iu * xi_tang[j], g, V[j]);
    accumulate(k_sign, 1.0, g, V[dim - 1]);
    for (ModeTerms& comp : V)
        merge_mode(comp, 1e-15);
    return V;
}

ResolventProfileResult apply_resolvent_profiles(double rho, double mu, cd lambda,
                                                const std::vector<double>& xi_tang,
                                                const std::vector<ModeTerms>& rhs) {
    const int dim = static_cast<int>(xi_tang.size()) + 1;
    if (static_cast<int>(rhs.size()) != dim)
        throw PreconditionError("apply_resolvent_profiles: rhs has wrong component count");
    const double A = tang_norm(xi_tang);
    if (A <= 0.0)
        throw PreconditionError("apply_resolvent_profiles: tangential frequency must be nonzero");
    const cd rl = rho * lambda;
    if (std::abs(rl) == 0.0)
        throw PreconditionError("apply_resolvent_profiles: lambda must be nonzero");
    const cd B = std::sqrt(rl / mu + A * A);

    // Normal-frequency inverse transforms of the resolvent symbol pieces at
    // fixed tangential frequency, from closing the contour at the poles
    // +-iA and +-iB:
    //   1/(rho lambda + mu |xi|^2)            -> e^{-B|a|} / (2 mu B)
    //   1/(|xi|^2 (rho lambda + mu |xi|^2))   -> (e^{-A|a|}/A - e^{-B|a|}/B) / (2 rho lambda)
    //   xi_N/(|xi|^2 (rho lambda + mu |xi|^2))-> sign(a) i (e^{-A|a|} - e^{-B|a|}) / (2 rho lambda)
    //   1/|xi|^2                              -> e^{-A|a|} / (2A)
    //   i xi_N/|xi|^2                         -> -sign(a) e^{-A|a|} / 2
    const PlainKernel k_res{B, 1.0 / (2.0 * mu * B), false};
    const PlainKernel k_pp_a{cd(A, 0.0), 1.0 / (2.0 * rl * A), false};
    const PlainKernel k_pp_b{B, -1.0 / (2.0 * rl * B), false};
    const PlainKernel k_mix_a{cd(A, 0.0), iu / (2.0 * rl), true};
    const PlainKernel k_mix_b{B, -iu / (2.0 * rl), true};
    const PlainKernel k_pois{cd(A, 0.0), cd(1.0 / (2.0 * A), 0.0), false};
    const PlainKernel k_sign{cd(A, 0.0), cd(0.5, 0.0), true};

    ResolventProfileResult out;
    out.velocity.resize(dim);
    for (int i = 0; i + 1 < dim; ++i) {
        accumulate(k_res, 1.0, rhs[i], out.velocity[i]);
        for (int j = 0; j + 1 < dim; ++j) {
            const cd factor = -xi_tang[i] * xi_tang[j];
            accumulate(k_pp_a, factor, rhs[j], out.velocity[i]);
            accumulate(k_pp_b, factor, rhs[j], out.velocity[i]);
        }
        accumulate(k_mix_a, -xi_tang[i], rhs[dim - 1], out.velocity[i]);
        accumulate(k_mix_b, -xi_tang[i], rhs[dim - 1], out.velocity[i]);
    }
    for (int j = 0; j + 1 < dim; ++j) {
        accumulate(k_mix_a, -xi_tang[j], rhs[j], out.velocity[dim - 1]);
        accumulate(k_mix_b, -xi_tang[j], rhs[j], out.velocity[dim - 1]);
    }
    accumulate(k_pp_a, A * A, rhs[dim - 1], out.velocity[dim - 1]);
    accumulate(k_pp_b, A * A, rhs[dim - 1], out.velocity[dim - 1]);

    for (int j = 0; j + 1 < dim; ++j)
        accumulate(k_pois, -iu * xi_tang[j], rhs[j], out.pressure);
    accumulate(k_sign, 1.0, rhs[dim - 1], out.pressure);

    for (ModeTerms& comp : out.velocity)
        merge_mode(comp, 1e-15);
    merge_mode(out.pressure, 1e-15);
    return out;
}

} // namespace stokes2p
