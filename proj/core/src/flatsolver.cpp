#include "stokes2p/flatsolver.hpp"

#include "stokes2p/interface.hpp"
#include "stokes2p/log.hpp"
#include "stokes2p/wholespace.hpp"

#include <algorithm>
#include <cmath>

namespace stokes2p {

WeakLambdaSolution solve_weak_lambda(const SpectralBoxField& f,
                                     const std::vector<cd>& h_jump, cd lambda) {
    const PeriodicGrid& g = f.grid;
    const int nt = g.tang_count();
    if (static_cast<int>(h_jump.size()) != nt)
        throw PreconditionError("solve_weak_lambda: jump array must have one entry per mode");
    if (std::abs(lambda) == 0.0)
        throw PreconditionError("solve_weak_lambda: lambda must be nonzero");

    WeakLambdaSolution out;
    out.g = FlowField::zero(g, 1);
    auto glob = std::make_shared<SpectralBoxField>(solve_heat_weak(f, lambda));
    out.g.glob_plus = glob;
    out.g.glob_minus = glob;
    out.g.prof = ProfileSet(1, nt);

    double scale = 0.0;
    for (const cd& h : h_jump)
        scale = std::max(scale, std::abs(h));
    for (int t = 0; t < nt; ++t) {
        const cd h = h_jump[t];
        if (h == cd(0.0))
            continue;
        const double A = g.xi_abs(t);
        if (A == 0.0) {
            out.zero_mode_dropped = std::max(out.zero_mode_dropped, std::abs(h) / scale);
            continue;
        }
        const cd B = std::sqrt(lambda + A * A);
        out.g.prof.add(Side::plus, 0, t, ProfileTerm::plain(B, 0.5 * h));
        out.g.prof.add(Side::minus, 0, t, ProfileTerm::plain(B, -0.5 * h));
    }
    return out;
}

namespace {

cd box_trace(const SpectralBoxField& f, int c, int t) {
    cd v = 0.0;
    for (int kn = 0; kn < f.grid.normal_cells; ++kn)
        v += f.at(c, t, kn);
    return v;
}

cd box_deriv_trace(const SpectralBoxField& f, int c, int t) {
    cd v = 0.0;
    for (int kn = 0; kn < f.grid.normal_cells; ++kn)
        v += iu * f.grid.xi_normal(kn) * f.at(c, t, kn);
    return v;
}

SpectralBoxField box_sum(const SpectralBoxField& a, const SpectralBoxField& b) {
    SpectralBoxField out = a;
    for (size_t i = 0; i < out.coef.size(); ++i)
        out.coef[i] += b.coef[i];
    return out;
}

double max_abs(const std::vector<cd>& v) {
    double m = 0.0;
    for (const cd& c : v)
        m = std::max(m, std::abs(c));
    return m;
}

} // namespace

FlatStokesSolution solve_flat_stokes(const FluidParams& fp, cd lambda,
                                     const SpectralBoxField& f, const FlowField& gdiv,
                                     const std::vector<cd>& h_jump) {
    validate(fp);
    const PeriodicGrid& grid = f.grid;
    const int dim = grid.dim;
    const int nt = grid.tang_count();
    const int nc = grid.normal_cells;
    if (f.ncomp != dim)
        throw PreconditionError("solve_flat_stokes: f must have dim components");
    if (gdiv.ncomp != 1 || !(gdiv.grid == grid))
        throw PreconditionError("solve_flat_stokes: g must be scalar on the same grid");
    if (gdiv.glob_plus.get() != gdiv.glob_minus.get())
        throw PreconditionError("solve_flat_stokes: g must have a shared smooth part");
    if (static_cast<int>(h_jump.size()) != dim * nt)
        throw PreconditionError("solve_flat_stokes: h must be laid out component*tang");
    if (std::abs(lambda) == 0.0)
        throw PreconditionError("solve_flat_stokes: lambda must be nonzero");

    FlatStokesSolution out;
    out.decay_margin = grid.half_height *
                       std::min(std::sqrt(fp.rho_plus * lambda / fp.mu_plus).real(),
                                std::sqrt(fp.rho_minus * lambda / fp.mu_minus).real());
    if (out.decay_margin < 20.0)
        log()->warn("solve_flat_stokes: slowest boundary layer decays only by exp(-{:.1f}) "
                    "across the half slab",
                    out.decay_margin);

    // a mean normal force admits no decaying two-phase velocity; project it
    SpectralBoxField fbox = f;
    const double fscale = max_abs(fbox.coef);
    cd& fdc = fbox.at(dim - 1, 0, 0);
    if (std::abs(fdc) > 0.0 && fscale > 0.0) {
        out.zero_mode_dropped = std::max(out.zero_mode_dropped, std::abs(fdc) / fscale);
        fdc = 0.0;
    }

    SpectralBoxField gbox = gdiv.glob(Side::plus)
                                ? *gdiv.glob(Side::plus)
                                : SpectralBoxField::zero(grid, 1);
    const double gscale = max_abs(gbox.coef);
    cd& gdc = gbox.at(0, 0, 0);
    if (std::abs(gdc) > 0.0 && gscale > 0.0) {
        out.zero_mode_dropped = std::max(out.zero_mode_dropped, std::abs(gdc) / gscale);
        gdc = 0.0;
    }

    // smooth route: divergence lift and phase-wise whole-space resolvent of
    // rho f - rho lambda V + mu (lap V + grad g)
    const SpectralBoxField V = solve_divergence(gbox);
    SpectralBoxField psi_glob[2]{SpectralBoxField::zero(grid, dim),
                                 SpectralBoxField::zero(grid, dim)};
    SpectralBoxField phi_glob[2]{SpectralBoxField::zero(grid, 1),
                                 SpectralBoxField::zero(grid, 1)};
    for (Side s : both_sides) {
        const double rho = fp.rho(s), mu = fp.mu(s);
        SpectralBoxField ft = SpectralBoxField::zero(grid, dim);
        for (int t = 0; t < nt; ++t) {
            const std::vector<double> xi = grid.xi_tang(t);
            const double A2 = grid.xi_abs(t) * grid.xi_abs(t);
            for (int kn = 0; kn < nc; ++kn) {
                const double xn = grid.xi_normal(kn);
                const cd lap = -(A2 + xn * xn);
                const cd gc = gbox.at(0, t, kn);
                for (int c = 0; c < dim; ++c) {
                    const cd grad_g = c + 1 < dim ? iu * xi[c] * gc : iu * xn * gc;
                    ft.at(c, t, kn) = rho * fbox.at(c, t, kn) +
                                      (-rho * lambda + mu * lap) * V.at(c, t, kn) +
                                      mu * grad_g;
                }
            }
        }
        ResolventSolution rs = solve_wholespace_resolvent(ft, lambda, rho, mu);
        psi_glob[side_index(s)] = std::move(rs.velocity);
        phi_glob[side_index(s)] = std::move(rs.pressure);
    }

    // layer route per tangential mode: exact kernel convolutions on the
    // profile part of g
    const bool has_layers = gdiv.has_profiles();
    std::vector<std::vector<ModeTerms>> Vp(nt);      // [t][comp]
    std::vector<std::vector<ModeTerms>> psi_prof[2]; // [side][t][comp]
    std::vector<ModeTerms> phi_prof[2];              // [side][t]
    for (Side s : both_sides) {
        psi_prof[side_index(s)].resize(nt);
        phi_prof[side_index(s)].resize(nt);
    }
    double prof_scale = 0.0;
    if (has_layers)
        for (Side s : both_sides)
            for (int t = 0; t < nt; ++t)
                for (const ProfileTerm& term : gdiv.prof.at(s, 0, t))
                    prof_scale = std::max(prof_scale, amp_bound(term));
    for (int t = 0; has_layers && t < nt; ++t) {
        ModeTerms gp;
        gp.plus = gdiv.prof.at(Side::plus, 0, t);
        gp.minus = gdiv.prof.at(Side::minus, 0, t);
        if (gp.empty())
            continue;
        const double A = grid.xi_abs(t);
        if (A == 0.0) {
            double amp = 0.0;
            for (Side s : both_sides)
                for (const ProfileTerm& term : gp.side(s))
                    amp = std::max(amp, amp_bound(term));
            out.zero_mode_dropped = std::max(out.zero_mode_dropped, amp / prof_scale);
            continue;
        }
        const std::vector<double> xi = grid.xi_tang(t);
        Vp[t] = divergence_lift_profiles(xi, gp);
        for (Side s : both_sides) {
            const double rho = fp.rho(s), mu = fp.mu(s);
            std::vector<ModeTerms> ft(dim);
            for (int c = 0; c < dim; ++c) {
                for (Side es : both_sides) {
                    std::vector<ProfileTerm>& dst = ft[c].side(es);
                    append_scaled(Vp[t][c].side(es), -rho * lambda, dst);
                    append_scaled(helmholtz_op(Vp[t][c].side(es), A), mu, dst);
                    if (c + 1 < dim)
                        append_scaled(gp.side(es), mu * iu * xi[c], dst);
                    else
                        append_scaled(deriv(gp.side(es)), mu * side_sign(es), dst);
                    merge_terms(dst, 1e-15);
                }
            }
            ResolventProfileResult rp = apply_resolvent_profiles(rho, mu, lambda, xi, ft);
            psi_prof[side_index(s)][t] = std::move(rp.velocity);
            phi_prof[side_index(s)][t] = std::move(rp.pressure);
        }
    }

    // interface data for the correction: the stress jump deficit and the
    // velocity mismatch of the phase-wise fields
    std::vector<cd> h_eff(static_cast<size_t>(dim) * nt), k_eff(h_eff.size());
    for (int t = 0; t < nt; ++t) {
        const std::vector<double> xi = grid.xi_tang(t);
        cd utr[2][3], und[2][3], th[2];
        for (Side s : both_sides) {
            const int si = side_index(s);
            for (int c = 0; c < dim; ++c) {
                cd tr = box_trace(V, c, t) + box_trace(psi_glob[si], c, t);
                cd dn = box_deriv_trace(V, c, t) + box_deriv_trace(psi_glob[si], c, t);
                if (has_layers && !Vp[t].empty()) {
                    tr += terms_trace(Vp[t][c].side(s));
                    dn += terms_deriv_trace(s, Vp[t][c].side(s));
                }
                if (has_layers && !psi_prof[si][t].empty()) {
                    tr += terms_trace(psi_prof[si][t][c].side(s));
                    dn += terms_deriv_trace(s, psi_prof[si][t][c].side(s));
                }
                utr[si][c] = tr;
                und[si][c] = dn;
            }
            th[si] = box_trace(phi_glob[si], 0, t);
            if (has_layers)
                th[si] += terms_trace(phi_prof[si][t].side(s));
        }
        for (int c = 0; c < dim; ++c) {
            cd stress[2];
            for (Side s : both_sides) {
                const int si = side_index(s);
                const double mu = fp.mu(s);
                if (c + 1 < dim)
                    stress[si] = -mu * (iu * xi[c] * utr[si][dim - 1] + und[si][c]);
                else
                    stress[si] = -(2.0 * mu * und[si][dim - 1] - th[si]);
            }
            const size_t idx = static_cast<size_t>(c) * nt + t;
            h_eff[idx] = h_jump[idx] - (stress[0] - stress[1]);
            k_eff[idx] = -(utr[0][c] - utr[1][c]);
        }
    }
    InterfaceCorrection cor = solve_interface_correction(grid, fp, lambda, h_eff, k_eff);
    out.zero_mode_dropped = std::max(out.zero_mode_dropped, cor.zero_mode_dropped);

    // assemble the output fields
    out.velocity = FlowField::zero(grid, dim);
    out.velocity.glob_plus =
        std::make_shared<SpectralBoxField>(box_sum(V, psi_glob[0]));
    out.velocity.glob_minus =
        std::make_shared<SpectralBoxField>(box_sum(V, psi_glob[1]));
    out.velocity.prof = ProfileSet(dim, nt);
    out.pressure = FlowField::zero(grid, 1);
    out.pressure.glob_plus = std::make_shared<SpectralBoxField>(std::move(phi_glob[0]));
    out.pressure.glob_minus = std::make_shared<SpectralBoxField>(std::move(phi_glob[1]));
    out.pressure.prof = ProfileSet(1, nt);
    for (Side s : both_sides) {
        const int si = side_index(s);
        for (int t = 0; t < nt; ++t) {
            for (int c = 0; c < dim; ++c) {
                std::vector<ProfileTerm>& dst = out.velocity.prof.at(s, c, t);
                if (has_layers && !Vp[t].empty())
                    append_scaled(Vp[t][c].side(s), 1.0, dst);
                if (has_layers && !psi_prof[si][t].empty())
                    append_scaled(psi_prof[si][t][c].side(s), 1.0, dst);
                append_scaled(cor.velocity.prof.at(s, c, t), 1.0, dst);
                merge_terms(dst, 1e-15);
            }
            std::vector<ProfileTerm>& pd = out.pressure.prof.at(s, 0, t);
            if (has_layers)
                append_scaled(phi_prof[si][t].side(s), 1.0, pd);
            append_scaled(cor.pressure.prof.at(s, 0, t), 1.0, pd);
            merge_terms(pd, 1e-15);
        }
    }
    return out;
}

ReducedFlatSolution solve_reduced_flat(const FluidParams& fp, cd lambda,
                                       const SpectralBoxField& f,
                                       const std::vector<cd>& h_jump) {
    const PeriodicGrid& grid = f.grid;
    const int dim = grid.dim;
    const int nt = grid.tang_count();
    if (static_cast<int>(h_jump.size()) != dim * nt)
        throw PreconditionError("solve_reduced_flat: h must be laid out component*tang");

    std::vector<cd> h_scalar(nt);
    for (int t = 0; t < nt; ++t)
        h_scalar[t] = -h_jump[static_cast<size_t>(dim - 1) * nt + t];
    WeakLambdaSolution wk = solve_weak_lambda(f, h_scalar, lambda);
    FlatStokesSolution fs = solve_flat_stokes(fp, lambda, f, wk.g, h_jump);

    ReducedFlatSolution out;
    out.velocity = std::move(fs.velocity);
    out.pressure = std::move(fs.pressure);
    out.divergence = std::move(wk.g);
    out.zero_mode_dropped = std::max(wk.zero_mode_dropped, fs.zero_mode_dropped);
    out.decay_margin = fs.decay_margin;
    return out;
}

} // namespace stokes2p
