#include "stokes2p/wholespace.hpp"

#include <cmath>
#include <stdexcept>

namespace stokes2p {

namespace {

// Full wave vector of box bin (t, kn); components 0..dim-2 tangential,
// dim-1 normal.
void wave_vector(const PeriodicGrid& g, int t, int kn, double* xi, double& xi2) {
    std::vector<double> xt = g.xi_tang(t);
    xi2 = 0.0;
    for (int j = 0; j < g.tang_dims(); ++j) {
        xi[j] = xt[j];
        xi2 += xi[j] * xi[j];
    }
    xi[g.dim - 1] = g.xi_normal(kn);
    xi2 += xi[g.dim - 1] * xi[g.dim - 1];
}

void require_ncomp(const SpectralBoxField& f, int n, const char* where) {
    if (f.ncomp != n)
        throw PreconditionError(std::string(where) + ": expected " + std::to_string(n) +
                                " components, got " + std::to_string(f.ncomp));
}

} // namespace

SpectralBoxField solve_divergence(const SpectralBoxField& g) {
    require_ncomp(g, 1, "solve_divergence");
    const PeriodicGrid& gr = g.grid;
    double scale = 0.0;
    for (const cd& c : g.coef) scale = std::max(scale, std::abs(c));
    SpectralBoxField v = SpectralBoxField::zero(gr, gr.dim);
    if (scale == 0.0) return v;
    if (std::abs(g.at(0, 0, 0)) > 1e-12 * scale)
        throw PreconditionError("solve_divergence: data has nonzero mean");
    std::vector<double> xi(gr.dim);
    for (int t = 0; t < gr.tang_count(); ++t) {
        for (int kn = 0; kn < gr.normal_cells; ++kn) {
            double xi2;
            wave_vector(gr, t, kn, xi.data(), xi2);
            if (xi2 == 0.0) continue;
            cd gc = g.at(0, t, kn);
            for (int c = 0; c < gr.dim; ++c)
                v.at(c, t, kn) = cd(0.0, -xi[c]) * gc / xi2;
        }
    }
    return v;
}

ResolventSolution solve_wholespace_resolvent(const SpectralBoxField& f, cd lambda,
                                             double rho, double mu) {
    const PeriodicGrid& gr = f.grid;
    require_ncomp(f, gr.dim, "solve_wholespace_resolvent");
    ResolventSolution out{SpectralBoxField::zero(gr, gr.dim), SpectralBoxField::zero(gr, 1)};
    std::vector<double> xi(gr.dim);
    std::vector<cd> fc(gr.dim);
    for (int t = 0; t < gr.tang_count(); ++t) {
        for (int kn = 0; kn < gr.normal_cells; ++kn) {
            double xi2;
            wave_vector(gr, t, kn, xi.data(), xi2);
            cd den = rho * lambda + mu * xi2;
            if (std::abs(den) <= 1e-14 * (rho * std::abs(lambda) + mu * xi2))
                throw std::domain_error(
                    "solve_wholespace_resolvent: resolvent denominator vanishes");
            for (int c = 0; c < gr.dim; ++c) fc[c] = f.at(c, t, kn);
            if (xi2 == 0.0) {
                for (int c = 0; c < gr.dim; ++c) out.velocity.at(c, t, kn) = fc[c] / den;
                continue;
            }
            cd dot = 0.0;
            for (int c = 0; c < gr.dim; ++c) dot += xi[c] * fc[c];
            out.pressure.at(0, t, kn) = cd(0.0, -1.0) * dot / xi2;
            for (int c = 0; c < gr.dim; ++c)
                out.velocity.at(c, t, kn) = (fc[c] - xi[c] * dot / xi2) / den;
        }
    }
    return out;
}

SpectralBoxField solve_heat_weak(const SpectralBoxField& f, cd lambda) {
    const PeriodicGrid& gr = f.grid;
    require_ncomp(f, gr.dim, "solve_heat_weak");
    SpectralBoxField phi = SpectralBoxField::zero(gr, 1);
    std::vector<double> xi(gr.dim);
    for (int t = 0; t < gr.tang_count(); ++t) {
        for (int kn = 0; kn < gr.normal_cells; ++kn) {
            double xi2;
            wave_vector(gr, t, kn, xi.data(), xi2);
            if (xi2 == 0.0) continue;
            cd den = lambda + xi2;
            if (std::abs(den) <= 1e-14 * (std::abs(lambda) + xi2))
                throw std::domain_error("solve_heat_weak: denominator vanishes");
            cd dot = 0.0;
            for (int c = 0; c < gr.dim; ++c) dot += xi[c] * f.at(c, t, kn);
            phi.at(0, t, kn) = cd(0.0, 1.0) * dot / den;
        }
    }
    return phi;
}

HelmholtzParts helmholtz_project(const SpectralBoxField& u) {
    const PeriodicGrid& gr = u.grid;
    require_ncomp(u, gr.dim, "helmholtz_project");
    HelmholtzParts out{u, SpectralBoxField::zero(gr, gr.dim)};
    std::vector<double> xi(gr.dim);
    for (int t = 0; t < gr.tang_count(); ++t) {
        for (int kn = 0; kn < gr.normal_cells; ++kn) {
            double xi2;
            wave_vector(gr, t, kn, xi.data(), xi2);
            if (xi2 == 0.0) continue;
            cd dot = 0.0;
            for (int c = 0; c < gr.dim; ++c) dot += xi[c] * u.at(c, t, kn);
            for (int c = 0; c < gr.dim; ++c) {
                cd grad = xi[c] * dot / xi2;
                out.gradient.at(c, t, kn) = grad;
                out.solenoidal.at(c, t, kn) -= grad;
            }
        }
    }
    return out;
}

double coef_l2(const SpectralBoxField& f) {
    double s = 0.0;
    for (const cd& c : f.coef) s += std::norm(c);
    return std::sqrt(s);
}

} // namespace stokes2p
