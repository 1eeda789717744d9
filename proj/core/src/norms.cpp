#include "stokes2p/norms.hpp"

#include "stokes2p/numerics.hpp"

#include <cmath>

namespace stokes2p {

namespace {

// Lq of the pointwise Euclidean magnitude across components, trapezoid in the
// normal direction, rectangle rule tangentially (periodic directions).
double lq_of_magnitude(const TwoPhaseField& f, double q) {
    const PeriodicGrid& g = f.grid;
    const int nt = g.tang_count();
    const int hc = g.half_count();
    const double h = g.normal_spacing();
    const double tang_meas = std::pow(g.tang_spacing(), g.dim - 1);
    double acc = 0.0;
    for (Side s : both_sides)
        for (int t = 0; t < nt; ++t)
            for (int i = 0; i < hc; ++i) {
                double mag2 = 0.0;
                for (int c = 0; c < f.ncomp; ++c) mag2 += std::norm(f.at(s, c, t, i));
                const double w = (i == 0 || i == hc - 1) ? 0.5 * h : h;
                acc += std::pow(mag2, q / 2.0) * w;
            }
    return std::pow(acc * tang_meas, 1.0 / q);
}

// Normal FD derivative of order m (1 or 2), sixth-order stencils, one-sided
// near the interface and the outer wall, applied per phase.
TwoPhaseField deriv_xn_sampled(const TwoPhaseField& f, int m) {
    const PeriodicGrid& g = f.grid;
    const int hc = g.half_count();
    const int nt = g.tang_count();
    const double h = g.normal_spacing();
    const int n = 7;
    std::vector<std::vector<double>> w(hc);
    for (int i = 0; i < hc; ++i) {
        const int start = std::clamp(i - 3, 0, hc - n);
        w[i] = fd_weights_uniform(n, m, h, i - start);
    }
    TwoPhaseField out = TwoPhaseField::zero(g, f.ncomp, f.space);
    for (Side s : both_sides)
        for (int c = 0; c < f.ncomp; ++c)
            for (int t = 0; t < nt; ++t)
                for (int i = 0; i < hc; ++i) {
                    const int start = std::clamp(i - 3, 0, hc - n);
                    cd acc{};
                    for (int k = 0; k < n; ++k) acc += w[i][k] * f.at(s, c, t, start + k);
                    // index measures distance from the interface, so d/dx_N
                    // flips sign on the lower side (odd orders only)
                    out.at(s, c, t, i) = (s == Side::minus && m % 2 == 1) ? -acc : acc;
                }
    return out;
}

TwoPhaseField deriv_tang_sampled(const TwoPhaseField& f, int j) {
    TwoPhaseField out = f;
    tangential_transform(out, TangSpace::spectral);
    const PeriodicGrid& g = f.grid;
    const int nt = g.tang_count();
    const int hc = g.half_count();
    for (int t = 0; t < nt; ++t) {
        const cd wj = iu * g.xi_tang(t)[static_cast<size_t>(j)];
        for (Side s : both_sides)
            for (int c = 0; c < f.ncomp; ++c)
                for (int i = 0; i < hc; ++i) out.at(s, c, t, i) *= wj;
    }
    tangential_transform(out, f.space == TangSpace::physical ? TangSpace::physical
                                                             : TangSpace::spectral);
    return out;
}

} // namespace

double lq_norm(const TwoPhaseField& f, double q) {
    if (f.space != TangSpace::physical) {
        TwoPhaseField tmp = f;
        tangential_transform(tmp, TangSpace::physical);
        return lq_of_magnitude(tmp, q);
    }
    return lq_of_magnitude(f, q);
}

NormReport discrete_norms(const TwoPhaseField& f_in, double q) {
    TwoPhaseField f = f_in;
    tangential_transform(f, TangSpace::physical);
    const PeriodicGrid& g = f.grid;
    const int d = g.dim;

    NormReport r;
    r.q = q;
    r.lq = lq_of_magnitude(f, q);

    // first derivatives: d fields of ncomp components each -> one stacked field
    std::vector<TwoPhaseField> firsts;
    for (int j = 0; j < d - 1; ++j) firsts.push_back(deriv_tang_sampled(f, j));
    firsts.push_back(deriv_xn_sampled(f, 1));

    TwoPhaseField grad = TwoPhaseField::zero(g, f.ncomp * d, TangSpace::physical);
    {
        const size_t block = f.plus_vals.size();
        for (int j = 0; j < d; ++j) {
            std::copy_n(firsts[j].plus_vals.begin(), block, grad.plus_vals.begin() + j * block);
            std::copy_n(firsts[j].minus_vals.begin(), block, grad.minus_vals.begin() + j * block);
        }
    }
    r.grad_lq = lq_of_magnitude(grad, q);

    // second derivatives: derivative of each first derivative in each direction
    TwoPhaseField hess = TwoPhaseField::zero(g, f.ncomp * d * d, TangSpace::physical);
    {
        const size_t block = f.plus_vals.size();
        int slot = 0;
        for (int j = 0; j < d; ++j) {
            for (int l = 0; l < d - 1; ++l) {
                TwoPhaseField dd = deriv_tang_sampled(firsts[j], l);
                std::copy_n(dd.plus_vals.begin(), block, hess.plus_vals.begin() + slot * block);
                std::copy_n(dd.minus_vals.begin(), block, hess.minus_vals.begin() + slot * block);
                ++slot;
            }
            TwoPhaseField dd = deriv_xn_sampled(firsts[j], 1);
            std::copy_n(dd.plus_vals.begin(), block, hess.plus_vals.begin() + slot * block);
            std::copy_n(dd.minus_vals.begin(), block, hess.minus_vals.begin() + slot * block);
            ++slot;
        }
    }
    r.hess_lq = lq_of_magnitude(hess, q);

    r.w1 = std::pow(std::pow(r.lq, q) + std::pow(r.grad_lq, q), 1.0 / q);
    r.w2 = std::pow(std::pow(r.lq, q) + std::pow(r.grad_lq, q) + std::pow(r.hess_lq, q), 1.0 / q);
    return r;
}

double structured_l2(const FlowField& f) {
    const PeriodicGrid& g = f.grid;
    const int nt = g.tang_count();
    const int hc = g.half_count();
    const int C = g.normal_cells;
    const double h = g.normal_spacing();
    const double L = g.half_height;
    const double tang_meas = std::pow(g.tang_period, g.dim - 1);

    double acc = 0.0;
    std::vector<cd> buf(hc);
    for (Side s : both_sides) {
        const double sign = side_sign(s);
        for (int c = 0; c < f.ncomp; ++c)
            for (int t = 0; t < nt; ++t) {
                const SpectralBoxField* gl = f.glob(s);
                const std::vector<ProfileTerm>* terms =
                    f.prof.empty() ? nullptr : &f.prof.at(s, c, t);
                if (gl) {
                    sample_side(*gl, s, c, t, buf.data());
                    for (int i = 0; i < hc; ++i) {
                        const double w = (i == 0 || i == hc - 1) ? 0.5 * h : h;
                        acc += std::norm(buf[i]) * w;
                    }
                }
                if (terms && !terms->empty()) {
                    // layer self-energy, exact
                    cd self{};
                    for (const auto& a : *terms)
                        for (const auto& b : *terms)
                            self += pair_integral_finite(a, conj_term(b), L);
                    acc += self.real();
                    // cross terms against the global part, exact per mode
                    if (gl) {
                        cd cross{};
                        for (const auto& b : *terms) {
                            const ProfileTerm cb = conj_term(b);
                            for (int kn = 0; kn < C; ++kn) {
                                const cd ck = gl->at(c, t, kn);
                                if (ck == cd{}) continue;
                                cross += ck * integrate_finite(
                                                  cb, -iu * (sign * g.xi_normal(kn)), L);
                            }
                        }
                        acc += 2.0 * cross.real();
                    }
                }
            }
    }
    return std::sqrt(std::max(0.0, acc) * tang_meas);
}

double structured_deriv_l2(const FlowField& f, int order) {
    if (order == 0) return structured_l2(f);
    const int d = f.grid.dim;
    auto dir_deriv = [&](const FlowField& x, int j) {
        return j < d - 1 ? deriv_tang(x, j) : deriv_xn(x);
    };
    double acc = 0.0;
    if (order == 1) {
        for (int j = 0; j < d; ++j) {
            const double v = structured_l2(dir_deriv(f, j));
            acc += v * v;
        }
    } else if (order == 2) {
        for (int j = 0; j < d; ++j) {
            FlowField dj = dir_deriv(f, j);
            for (int l = 0; l < d; ++l) {
                const double v = structured_l2(dir_deriv(dj, l));
                acc += v * v;
            }
        }
    } else {
        throw PreconditionError("structured_deriv_l2: order must be 0, 1, or 2");
    }
    return std::sqrt(acc);
}

} // namespace stokes2p
