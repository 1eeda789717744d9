#include "stokes2p/transmission.hpp"

#include "stokes2p/convolve.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace stokes2p {

namespace {

double list_amp(const std::vector<ProfileTerm>& terms) {
    double m = 0.0;
    for (const ProfileTerm& t : terms)
        m = std::max(m, amp_bound(t));
    return m;
}

// Particular solution of (d^2/dz^2 - A^2) theta = src(z) for one source term,
// A > 0. Plain sources are handled uniformly in the rate gap via a difference
// shape; difference sources use partial fractions with the pair ordered so
// the divided-out rate sits farthest from A.
void append_particular(const ProfileTerm& src, double A, double drop_below,
                       std::vector<ProfileTerm>& out) {
    if (src.coef == cd(0.0))
        return;
    if (!src.diff) {
        out.push_back(
            ProfileTerm::difference(A, src.kappa1, -src.coef / (src.kappa1 + A)));
        return;
    }
    cd k1 = src.kappa1, k2 = src.kappa2;
    if (std::abs(k1 * k1 - A * A) < std::abs(k2 * k2 - A * A))
        std::swap(k1, k2);
    const cd p1 = k1 * k1 - cd(A * A);
    if (std::abs(p1) < 1e-9 * std::max(A * A, std::norm(k1))) {
        // both rates resonate with A; the solution needs z^2 exp(-A z)
        if (amp_bound(src) <= drop_below)
            return;
        throw PreconditionError(
            "transmission_poisson_solve: difference source resonant with the "
            "tangential rate is not representable");
    }
    const cd p = 1.0 / p1;
    const cd q = -p * (k1 + k2) / (k2 + A);
    out.push_back(ProfileTerm::difference(k1, k2, src.coef * p));
    out.push_back(ProfileTerm::difference(A, k2, src.coef * q));
}

// Decaying antiderivative of one source term, for the xi' = 0 flux equation.
void append_antiderivative(const ProfileTerm& src, std::vector<ProfileTerm>& out,
                           double& dropped) {
    if (src.coef == cd(0.0))
        return;
    if (std::min(std::abs(src.kappa1), std::abs(src.kappa2)) < 1e-12) {
        dropped = std::max(dropped, amp_bound(src));
        return;
    }
    if (!src.diff) {
        out.push_back(ProfileTerm::plain(src.kappa1, -src.coef / src.kappa1));
        return;
    }
    out.push_back(
        ProfileTerm::difference(src.kappa1, src.kappa2, -src.coef / src.kappa2));
    out.push_back(ProfileTerm::plain(src.kappa1, -src.coef / (src.kappa1 * src.kappa2)));
}

} // namespace

TransmissionSolution transmission_poisson_solve(const FluidParams& fp,
                                                const FlowField& alpha,
                                                const std::vector<cd>& beta) {
    validate(fp);
    const PeriodicGrid& g = alpha.grid;
    const int dim = g.dim;
    const int nt = g.tang_count();
    if (alpha.ncomp != dim)
        throw PreconditionError(
            "transmission_poisson_solve: alpha must have dim components");
    if (static_cast<int>(beta.size()) != nt)
        throw PreconditionError(
            "transmission_poisson_solve: beta must have one entry per mode");

    TransmissionSolution out;
    out.theta = FlowField::zero(g, 1);
    out.theta.prof = ProfileSet(1, nt);

    // smooth particular per side: theta_hat = -i rho (xi . alpha_hat) / |xi|^2
    std::shared_ptr<SpectralBoxField> th_glob[2];
    for (Side s : both_sides) {
        const SpectralBoxField* ag = alpha.glob(s);
        if (!ag)
            continue;
        auto th = std::make_shared<SpectralBoxField>(SpectralBoxField::zero(g, 1));
        for (int t = 0; t < nt; ++t) {
            const std::vector<double> xi = g.xi_tang(t);
            const double A = g.xi_abs(t);
            for (int kn = 0; kn < g.normal_cells; ++kn) {
                const double xn = g.xi_normal(kn);
                const double den = A * A + xn * xn;
                if (den == 0.0)
                    continue;
                cd dot = xn * ag->at(dim - 1, t, kn);
                for (int j = 0; j + 1 < dim; ++j)
                    dot += xi[j] * ag->at(j, t, kn);
                th->at(0, t, kn) = -iu * fp.rho(s) * dot / den;
            }
        }
        th_glob[side_index(s)] = th;
    }
    out.theta.glob_plus = th_glob[0];
    out.theta.glob_minus = th_glob[1];

    double data_scale = 0.0;
    for (Side s : both_sides) {
        if (const SpectralBoxField* ag = alpha.glob(s))
            for (const cd& c : ag->coef)
                data_scale = std::max(data_scale, std::abs(c));
        if (!alpha.prof.empty())
            for (int c = 0; c < dim; ++c)
                for (int t = 0; t < nt; ++t)
                    data_scale = std::max(data_scale, list_amp(alpha.prof.at(s, c, t)));
    }
    for (const cd& b : beta)
        data_scale = std::max(data_scale, std::abs(b));
    double dropped = 0.0;

    for (int t = 0; t < nt; ++t) {
        const double A = g.xi_abs(t);
        const std::vector<double> xi = g.xi_tang(t);

        std::vector<ProfileTerm> div_a[2], a_n[2];
        for (Side s : both_sides) {
            if (alpha.prof.empty())
                continue;
            const int si = side_index(s);
            a_n[si] = alpha.prof.at(s, dim - 1, t);
            for (int j = 0; j + 1 < dim; ++j)
                append_scaled(alpha.prof.at(s, j, t), iu * xi[j], div_a[si]);
            append_scaled(deriv(a_n[si]), side_sign(s), div_a[si]);
            merge_terms(div_a[si], 1e-15);
        }

        if (A > 0.0) {
            const double drop_below = 1e-9 * (1.0 + A) * data_scale;
            cd tr[2], dn[2], atr[2];
            for (Side s : both_sides) {
                const int si = side_index(s);
                auto& th = out.theta.prof.at(s, 0, t);
                for (const ProfileTerm& term : div_a[si]) {
                    ProfileTerm scaled = term;
                    scaled.coef *= fp.rho(s);
                    append_particular(scaled, A, drop_below, th);
                }
                merge_terms(th, 1e-15);
                tr[si] = terms_trace(th);
                dn[si] = terms_deriv_trace(s, th);
                atr[si] = terms_trace(a_n[si]);
                if (th_glob[si])
                    for (int kn = 0; kn < g.normal_cells; ++kn) {
                        tr[si] += th_glob[si]->at(0, t, kn);
                        dn[si] += iu * g.xi_normal(kn) * th_glob[si]->at(0, t, kn);
                    }
                if (const SpectralBoxField* ag = alpha.glob(s))
                    for (int kn = 0; kn < g.normal_cells; ++kn)
                        atr[si] += ag->at(dim - 1, t, kn);
            }
            // layer constants from the jump and the weak flux continuity
            const cd b1 = beta[t] - (tr[0] - tr[1]);
            const cd b2 = (dn[1] / fp.rho_minus - atr[1]) - (dn[0] / fp.rho_plus - atr[0]);
            const cd cp = (A * b1 / fp.rho_minus - b2) /
                          (A * (1.0 / fp.rho_plus + 1.0 / fp.rho_minus));
            const cd cm = cp - b1;
            if (cp != cd(0.0))
                out.theta.prof.add(Side::plus, 0, t, ProfileTerm::plain(A, cp));
            if (cm != cd(0.0))
                out.theta.prof.add(Side::minus, 0, t, ProfileTerm::plain(A, cm));
        } else {
            // xi' = 0: the flux equation integrates directly; phase constants
            // carry the jump and are normalized to sum to zero
            cd tr[2];
            for (Side s : both_sides) {
                const int si = side_index(s);
                auto& th = out.theta.prof.at(s, 0, t);
                for (const ProfileTerm& term : a_n[si]) {
                    ProfileTerm scaled = term;
                    scaled.coef *= fp.rho(s) * side_sign(s);
                    append_antiderivative(scaled, th, dropped);
                }
                merge_terms(th, 1e-15);
                tr[si] = terms_trace(th);
                if (th_glob[si])
                    for (int kn = 0; kn < g.normal_cells; ++kn)
                        tr[si] += th_glob[si]->at(0, t, kn);
            }
            cd dc[2] = {cd(0.0), cd(0.0)};
            for (Side s : both_sides)
                if (const SpectralBoxField* ag = alpha.glob(s))
                    dc[side_index(s)] = ag->at(dim - 1, 0, 0);
            dropped = std::max(dropped, std::abs(dc[0] - dc[1]));
            const cd c0 = 0.5 * (beta[t] - (tr[0] - tr[1]));
            if (c0 != cd(0.0)) {
                out.theta.prof.add(Side::plus, 0, t, ProfileTerm::plain(0.0, c0));
                out.theta.prof.add(Side::minus, 0, t, ProfileTerm::plain(0.0, -c0));
            }
        }
    }
    out.zero_mode_dropped = data_scale > 0.0 ? dropped / data_scale : 0.0;
    return out;
}

TransmissionSolution compute_reduced_pressure(const FluidParams& fp, const FlowField& u) {
    validate(fp);
    const PeriodicGrid& g = u.grid;
    const int dim = g.dim;
    const int nt = g.tang_count();
    if (u.ncomp != dim)
        throw PreconditionError("compute_reduced_pressure: u must have dim components");

    FlowField alpha = FlowField::zero(g, dim);
    alpha.prof = ProfileSet(dim, nt);
    std::vector<cd> beta(nt, cd(0.0));

    std::shared_ptr<SpectralBoxField> ag[2];
    for (Side s : both_sides) {
        const SpectralBoxField* ug = u.glob(s);
        if (!ug)
            continue;
        const double w = fp.mu(s) / fp.rho(s);
        auto a = std::make_shared<SpectralBoxField>(SpectralBoxField::zero(g, dim));
        for (int t = 0; t < nt; ++t) {
            const std::vector<double> xi = g.xi_tang(t);
            const double A2 = g.xi_abs(t) * g.xi_abs(t);
            for (int kn = 0; kn < g.normal_cells; ++kn) {
                const double xn = g.xi_normal(kn);
                cd divu = iu * xn * ug->at(dim - 1, t, kn);
                for (int j = 0; j + 1 < dim; ++j)
                    divu += iu * xi[j] * ug->at(j, t, kn);
                for (int c = 0; c < dim; ++c) {
                    const cd grad_c = (c + 1 < dim ? iu * xi[c] : iu * xn) * divu;
                    a->at(c, t, kn) = -w * (A2 + xn * xn) * ug->at(c, t, kn) +
                                      (w - 1.0) * grad_c;
                }
            }
        }
        ag[side_index(s)] = a;
    }
    alpha.glob_plus = ag[0];
    alpha.glob_minus = ag[1];

    for (int t = 0; t < nt; ++t) {
        const double A = g.xi_abs(t);
        const std::vector<double> xi = g.xi_tang(t);
        cd jump_b = 0.0;
        for (Side s : both_sides) {
            const double w = fp.mu(s) / fp.rho(s);
            std::vector<ProfileTerm> divu;
            cd dn_un = 0.0, div_tr = 0.0;
            if (!u.prof.empty()) {
                for (int j = 0; j + 1 < dim; ++j)
                    append_scaled(u.prof.at(s, j, t), iu * xi[j], divu);
                append_scaled(deriv(u.prof.at(s, dim - 1, t)), side_sign(s), divu);
                merge_terms(divu, 1e-15);
                for (int c = 0; c < dim; ++c) {
                    auto& ac = alpha.prof.at(s, c, t);
                    append_scaled(helmholtz_op(u.prof.at(s, c, t), A), w, ac);
                    if (c + 1 < dim)
                        append_scaled(divu, (w - 1.0) * iu * xi[c], ac);
                    else
                        append_scaled(deriv(divu), (w - 1.0) * side_sign(s), ac);
                    merge_terms(ac, 1e-15);
                }
                dn_un = terms_deriv_trace(s, u.prof.at(s, dim - 1, t));
                div_tr = terms_trace(divu);
            }
            if (const SpectralBoxField* ug = u.glob(s))
                for (int kn = 0; kn < g.normal_cells; ++kn) {
                    const double xn = g.xi_normal(kn);
                    dn_un += iu * xn * ug->at(dim - 1, t, kn);
                    div_tr += iu * xn * ug->at(dim - 1, t, kn);
                    for (int j = 0; j + 1 < dim; ++j)
                        div_tr += iu * xi[j] * ug->at(j, t, kn);
                }
            jump_b += side_sign(s) * (2.0 * fp.mu(s) * dn_un - div_tr);
        }
        beta[t] = jump_b;
    }
    return transmission_poisson_solve(fp, alpha, beta);
}

WeightedHelmholtz helmholtz_project_weighted(const FluidParams& fp, const FlowField& f) {
    const PeriodicGrid& g = f.grid;
    const int dim = g.dim;
    const int nt = g.tang_count();
    if (f.ncomp != dim)
        throw PreconditionError(
            "helmholtz_project_weighted: field must have dim components");

    TransmissionSolution ts =
        transmission_poisson_solve(fp, f, std::vector<cd>(nt, cd(0.0)));

    WeightedHelmholtz out;
    out.potential = ts.theta;
    out.zero_mode_dropped = ts.zero_mode_dropped;
    out.solenoidal = FlowField::zero(g, dim);
    out.solenoidal.prof = ProfileSet(dim, nt);

    std::shared_ptr<SpectralBoxField> jg[2];
    for (Side s : both_sides) {
        const SpectralBoxField* fg = f.glob(s);
        const SpectralBoxField* tg = ts.theta.glob(s);
        if (!fg && !tg)
            continue;
        const double ri = 1.0 / fp.rho(s);
        auto jb = std::make_shared<SpectralBoxField>(SpectralBoxField::zero(g, dim));
        for (int t = 0; t < nt; ++t) {
            const std::vector<double> xi = g.xi_tang(t);
            for (int kn = 0; kn < g.normal_cells; ++kn) {
                const double xn = g.xi_normal(kn);
                const cd th = tg ? tg->at(0, t, kn) : cd(0.0);
                for (int c = 0; c < dim; ++c) {
                    const cd grad_c = (c + 1 < dim ? iu * xi[c] : iu * xn) * th;
                    jb->at(c, t, kn) =
                        (fg ? fg->at(c, t, kn) : cd(0.0)) - ri * grad_c;
                }
            }
        }
        jg[side_index(s)] = jb;
    }
    out.solenoidal.glob_plus = jg[0];
    out.solenoidal.glob_minus = jg[1];

    for (int t = 0; t < nt; ++t) {
        const std::vector<double> xi = g.xi_tang(t);
        for (Side s : both_sides) {
            const double ri = 1.0 / fp.rho(s);
            const auto& th = ts.theta.prof.at(s, 0, t);
            for (int c = 0; c < dim; ++c) {
                auto& jc = out.solenoidal.prof.at(s, c, t);
                if (!f.prof.empty())
                    jc = f.prof.at(s, c, t);
                if (c + 1 < dim)
                    append_scaled(th, -ri * iu * xi[c], jc);
                else
                    append_scaled(deriv(th), -ri * side_sign(s), jc);
                merge_terms(jc, 1e-15);
            }
        }
    }
    return out;
}

} // namespace stokes2p
