#pragma once

// Finite-difference residual oracles shared by the solver test suites: they
// evaluate solver outputs pointwise and rebuild every equation of the flat
// two-phase system by numerical differentiation in x_N and exact tangential
// factors, independently of the spectral algebra inside the solvers.

#include "stokes2p/field.hpp"
#include "stokes2p/numerics.hpp"
#include "stokes2p/params.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace stokes2p::oracles {

struct FlatResidual {
    double momentum = 0.0;      // max |rho lambda u - Div(mu D(u)) + grad theta - rho f|
    double divergence = 0.0;    // max |div u - g|
    double velocity_jump = 0.0; // max |[[u]]|
    double stress_jump = 0.0;   // max |[[ (mu D(u) - theta I) n0 ]] - h|
    double scale = 0.0;         // max sampled |rho f|, |rho lambda u|, |h|
};

inline FlatResidual flat_residual(const FluidParams& fp, cd lambda,
                                  const SpectralBoxField& f, const FlowField& gdiv,
                                  const std::vector<cd>& h_jump, const FlowField& u,
                                  const FlowField& theta) {
    const PeriodicGrid& grid = f.grid;
    const int dim = grid.dim;
    const int nt = grid.tang_count();
    const double zs[3] = {0.3, 0.9, 2.2};
    FlatResidual r;

    for (int t = 0; t < nt; ++t) {
        const std::vector<double> xi = grid.xi_tang(t);
        const double A = grid.xi_abs(t);
        double maxrate = A;
        for (Side s : both_sides) {
            maxrate = std::max(maxrate, std::abs(std::sqrt(fp.rho(s) * lambda / fp.mu(s) +
                                                           A * A)));
            if (!gdiv.prof.empty())
                for (const ProfileTerm& term : gdiv.prof.at(s, 0, t))
                    maxrate = std::max({maxrate, std::abs(term.kappa1),
                                        std::abs(term.kappa2)});
        }
        const double h = std::min(0.02, 0.06 / std::max(1.0, maxrate));
        const std::vector<double> w1 = fd_weights_uniform(7, 1, h, 3);
        const std::vector<double> w2 = fd_weights_uniform(7, 2, h, 3);

        for (Side s : both_sides) {
            const double rho = fp.rho(s), mu = fp.mu(s);
            for (double z : zs) {
                const double x0 = side_sign(s) * z;
                cd uv[3], d1[3], d2[3], th = theta.eval_mode(s, 0, t, x0), dth = 0.0;
                for (int c = 0; c < dim; ++c) {
                    uv[c] = u.eval_mode(s, c, t, x0);
                    d1[c] = d2[c] = 0.0;
                }
                for (int i = 0; i < 7; ++i) {
                    const double x = x0 + (i - 3) * h;
                    for (int c = 0; c < dim; ++c) {
                        const cd v = u.eval_mode(s, c, t, x);
                        d1[c] += w1[i] * v;
                        d2[c] += w2[i] * v;
                    }
                    dth += w1[i] * theta.eval_mode(s, 0, t, x);
                }
                cd div = d1[dim - 1], ddiv_n = d2[dim - 1];
                for (int j = 0; j + 1 < dim; ++j) {
                    div += iu * xi[j] * uv[j];
                    ddiv_n += iu * xi[j] * d1[j];
                }
                for (int c = 0; c < dim; ++c) {
                    const cd lap = d2[c] - A * A * uv[c];
                    const cd ddiv = c + 1 < dim ? iu * xi[c] * div : ddiv_n;
                    const cd grad_th = c + 1 < dim ? iu * xi[c] * th : dth;
                    const cd fc = f.eval_mode(c, t, x0);
                    const cd mom = rho * lambda * uv[c] - mu * (lap + ddiv) + grad_th -
                                   rho * fc;
                    r.momentum = std::max(r.momentum, std::abs(mom));
                    r.scale = std::max({r.scale, std::abs(rho * fc),
                                        std::abs(rho * lambda * uv[c])});
                }
                r.divergence = std::max(
                    r.divergence, std::abs(div - gdiv.eval_mode(s, 0, t, x0)));
            }
        }

        // interface conditions: exact traces for the velocity jump, one-sided
        // finite differences for the stress
        for (int c = 0; c < dim; ++c)
            r.velocity_jump = std::max(r.velocity_jump, std::abs(u.jump_mode(c, t)));
        cd stress[2][3], thtr[2];
        for (Side s : both_sides) {
            const int si = side_index(s);
            const double mu = fp.mu(s);
            std::vector<double> nodes(6), wside(6);
            for (int i = 0; i < 6; ++i)
                nodes[i] = side_sign(s) * i * h;
            fd_weights(0.0, nodes.data(), 6, 1, wside.data());
            cd dn[3];
            for (int c = 0; c < dim; ++c) {
                dn[c] = 0.0;
                for (int i = 0; i < 6; ++i)
                    dn[c] += wside[i] * u.eval_mode(s, c, t, nodes[i]);
            }
            thtr[si] = theta.trace_mode(s, 0, t);
            for (int j = 0; j + 1 < dim; ++j)
                stress[si][j] =
                    -mu * (iu * xi[j] * u.trace_mode(s, dim - 1, t) + dn[j]);
            stress[si][dim - 1] = -(2.0 * mu * dn[dim - 1] - thtr[si]);
        }
        for (int c = 0; c < dim; ++c) {
            const cd target = h_jump[static_cast<size_t>(c) * nt + t];
            r.scale = std::max(r.scale, std::abs(target));
            r.stress_jump = std::max(
                r.stress_jump, std::abs(stress[0][c] - stress[1][c] - target));
        }
    }
    return r;
}

/// Max over modes and sample points of |div u| by the same finite-difference
/// route, for checking solenoidality of a velocity field.
inline double divergence_sup(const FlowField& u) {
    const PeriodicGrid& grid = u.grid;
    const int dim = grid.dim;
    double worst = 0.0;
    const double h = 0.01;
    const std::vector<double> w1 = fd_weights_uniform(7, 1, h, 3);
    for (int t = 0; t < grid.tang_count(); ++t) {
        const std::vector<double> xi = grid.xi_tang(t);
        for (Side s : both_sides) {
            for (double z : {0.3, 0.9, 2.2}) {
                const double x0 = side_sign(s) * z;
                cd div = 0.0;
                for (int i = 0; i < 7; ++i)
                    div += w1[i] * u.eval_mode(s, dim - 1, t, x0 + (i - 3) * h);
                for (int j = 0; j + 1 < dim; ++j)
                    div += iu * xi[j] * u.eval_mode(s, j, t, x0);
                worst = std::max(worst, std::abs(div));
            }
        }
    }
    return worst;
}

} // namespace stokes2p::oracles
