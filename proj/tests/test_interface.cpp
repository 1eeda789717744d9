#include "doctest.h"

#include "stokes2p/interface.hpp"
#include "stokes2p/params.hpp"
#include "stokes2p/rng.hpp"
#include "stokes2p/symbols.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <vector>

using namespace stokes2p;

namespace {

struct ModeDraw {
    FluidParams fp;
    cd lambda;
    std::vector<double> xi;
    std::vector<cd> h, k;
};

std::vector<ModeDraw> make_draws(int dim, Rng& rng) {
    std::vector<ModeDraw> draws;
    std::vector<FluidParams> fps = {
        {1.0, 1.7, 1.2, 0.4},
        {1.0, 1.0, 1.0, 1.0},
        {rng.uniform(0.3, 3.0), rng.uniform(0.3, 3.0), rng.uniform(0.3, 3.0),
         rng.uniform(0.3, 3.0)},
    };
    auto data = [&](int n) {
        std::vector<cd> v(n);
        for (cd& c : v) c = rng.complex_gaussian();
        return v;
    };
    for (const FluidParams& fp : fps) {
        for (int rep = 0; rep < 2; ++rep) {
            ModeDraw d;
            d.fp = fp;
            double r = std::exp(rng.uniform(std::log(0.3), std::log(30.0)));
            double ang = rng.uniform(-0.7, 0.7) * pi;
            d.lambda = r * std::exp(cd(0.0, ang));
            d.xi.resize(dim - 1);
            for (double& x : d.xi) x = rng.uniform(-3.0, 3.0);
            d.h = data(dim);
            d.k = data(dim);
            draws.push_back(d);
        }
    }
    // nearly confluent B ~ A and strongly anisotropic draws
    ModeDraw tiny;
    tiny.fp = {1.0, 1.7, 1.2, 0.4};
    tiny.lambda = 1e-8 * std::exp(cd(0.0, 0.3));
    tiny.xi.assign(dim - 1, 1.1);
    tiny.h = data(dim);
    tiny.k = data(dim);
    draws.push_back(tiny);
    ModeDraw wide;
    wide.fp = {1.4, 0.9, 0.6, 2.0};
    wide.lambda = cd(2.0, 40.0);
    wide.xi.assign(dim - 1, 40.0);
    wide.h = data(dim);
    wide.k = data(dim);
    draws.push_back(wide);
    return draws;
}

// First-principles linear system on the coefficient vector
// [diff_+, beta_+, gamma_+, diff_-, beta_-, gamma_-] where diff_J is the
// difference-profile amplitude alpha_J (B - A): the per-mode momentum and
// divergence identities per exponential, the two stress jumps, and the
// velocity jump. Rows containing alpha are scaled by (B - A) so the system
// stays polynomial (and well conditioned) through the confluent limit B = A.
// Returns the (4N+4) x (4N+2) matrix and right-hand side.
void build_mode_equations(const FluidParams& fp, cd lambda, const std::vector<double>& xi,
                          const std::vector<cd>& h, const std::vector<cd>& k,
                          Eigen::MatrixXcd& M, Eigen::VectorXcd& rhs) {
    const int dim = static_cast<int>(xi.size()) + 1;
    const int n = dim - 1;
    double A2 = 0.0;
    for (double x : xi) A2 += x * x;
    const double A = std::sqrt(A2);
    const int rows = 4 * dim + 4, cols = 4 * dim + 2;
    M = Eigen::MatrixXcd::Zero(rows, cols);
    rhs = Eigen::VectorXcd::Zero(rows);

    auto off = [&](Side s) { return side_index(s) * (2 * dim + 1); };
    auto ia = [&](Side s, int J) { return off(s) + J; };
    auto ib = [&](Side s, int J) { return off(s) + dim + J; };
    auto ig = [&](Side s) { return off(s) + 2 * dim; };
    auto B = [&](Side s) {
        return eval_B(fp.rho(s), fp.mu(s), lambda, A);
    };

    int r = 0;
    for (Side s : both_sides) {
        const cd Bs = B(s);
        const double mu = fp.mu(s), sg = side_sign(s);
        const cd fac = mu * (Bs + A); // mu (B^2 - A^2) alpha = mu (B + A) diff
        for (int j = 0; j < n; ++j) { // tangential momentum, e^{-A z} part
            M(r, ia(s, j)) = fac;
            M(r, ig(s)) = cd(0.0, xi[j]);
            ++r;
        }
        // normal momentum, e^{-A z} part
        M(r, ia(s, n)) = fac;
        M(r, ig(s)) = -sg * A;
        ++r;
        // divergence, e^{-A z} part, and the e^{-B z} part combined with it
        // so the row stays nondegenerate through the confluent limit B = A:
        // (div-B) (B - A) + (div-A) = i xi'.beta + sg diff_N - sg B beta_N
        for (int j = 0; j < n; ++j) M(r, ia(s, j)) = cd(0.0, xi[j]);
        M(r, ia(s, n)) = -sg * A;
        ++r;
        for (int j = 0; j < n; ++j) M(r, ib(s, j)) = cd(0.0, xi[j]);
        M(r, ia(s, n)) = sg;
        M(r, ib(s, n)) = -sg * Bs;
        ++r;
    }
    const cd Bp = B(Side::plus), Bm = B(Side::minus);
    const double mp = fp.mu_plus, mm = fp.mu_minus;
    for (int j = 0; j < n; ++j) { // tangential stress jump
        M(r, ib(Side::plus, n)) = mp * cd(0.0, xi[j]);
        M(r, ia(Side::plus, j)) = mp;       // mu_+ (B_+ - A) alpha_+j
        M(r, ib(Side::plus, j)) = -mp * Bp;
        M(r, ib(Side::minus, n)) = -mm * cd(0.0, xi[j]);
        M(r, ia(Side::minus, j)) = mm;      // -mu_- (A - B_-) alpha_-j
        M(r, ib(Side::minus, j)) = -mm * Bm;
        rhs(r) = -h[j];
        ++r;
    }
    // normal stress jump
    M(r, ia(Side::plus, n)) = 2.0 * mp;
    M(r, ib(Side::plus, n)) = -2.0 * mp * Bp;
    M(r, ig(Side::plus)) = -1.0;
    M(r, ia(Side::minus, n)) = 2.0 * mm;
    M(r, ib(Side::minus, n)) = -2.0 * mm * Bm;
    M(r, ig(Side::minus)) = 1.0;
    rhs(r) = -h[n];
    ++r;
    // velocity jump
    for (int J = 0; J < dim; ++J) {
        M(r, ib(Side::plus, J)) = 1.0;
        M(r, ib(Side::minus, J)) = -1.0;
        rhs(r) = k[J];
        ++r;
    }
}

// Packs the closed-form output into the oracle's coefficient layout.
Eigen::VectorXcd closed_form_vector(const InterfaceModeSolution& s) {
    const int dim = s.dim;
    Eigen::VectorXcd x(4 * dim + 2);
    for (Side sd : both_sides) {
        const int off = side_index(sd) * (2 * dim + 1);
        const std::vector<cd>& d = sd == Side::plus ? s.diff_plus : s.diff_minus;
        const std::vector<cd>& e = sd == Side::plus ? s.exp_plus : s.exp_minus;
        for (int J = 0; J < dim; ++J) {
            x(off + J) = d[J];
            x(off + dim + J) = e[J];
        }
        x(off + 2 * dim) = sd == Side::plus ? s.pres_plus : s.pres_minus;
    }
    return x;
}

double data_scale(const ModeDraw& d) {
    double m = 0.0;
    for (const cd& c : d.h) m = std::max(m, std::abs(c));
    for (const cd& c : d.k) m = std::max(m, std::abs(c));
    return m;
}

} // namespace

TEST_CASE("mode solution satisfies the interface equations") {
    Rng rng(2024);
    for (int dim : {2, 3}) {
        for (const ModeDraw& d : make_draws(dim, rng)) {
            CAPTURE(dim);
            CAPTURE(d.lambda);
            InterfaceModeSolution sol = assemble_mode_system(d.fp, d.lambda, d.xi, d.h, d.k);
            Eigen::MatrixXcd M;
            Eigen::VectorXcd rhs;
            build_mode_equations(d.fp, d.lambda, d.xi, d.h, d.k, M, rhs);
            Eigen::VectorXcd x = closed_form_vector(sol);
            for (int r = 0; r < M.rows(); ++r) {
                cd res = -rhs(r);
                double scale = std::abs(rhs(r));
                for (int c = 0; c < M.cols(); ++c) {
                    res += M(r, c) * x(c);
                    scale += std::abs(M(r, c)) * std::abs(x(c));
                }
                CHECK(std::abs(res) < 1e-10 * (scale + data_scale(d)));
            }
        }
    }
}

TEST_CASE("mode solution matches dense least-squares solve") {
    Rng rng(77);
    for (int dim : {2, 3}) {
        for (const ModeDraw& d : make_draws(dim, rng)) {
            InterfaceModeSolution sol = assemble_mode_system(d.fp, d.lambda, d.xi, d.h, d.k);
            Eigen::MatrixXcd M;
            Eigen::VectorXcd rhs;
            build_mode_equations(d.fp, d.lambda, d.xi, d.h, d.k, M, rhs);
            // equilibrate rows and columns; the system is consistent, so the
            // weighted least-squares solution is the same solution
            Eigen::VectorXd rowsc(M.rows()), colsc(M.cols());
            for (int r = 0; r < M.rows(); ++r) {
                double m = std::max(M.row(r).cwiseAbs().maxCoeff(), std::abs(rhs(r)));
                rowsc(r) = m > 0.0 ? 1.0 / m : 1.0;
            }
            M = rowsc.asDiagonal() * M;
            rhs = rowsc.asDiagonal() * rhs;
            for (int c = 0; c < M.cols(); ++c) {
                double m = M.col(c).cwiseAbs().maxCoeff();
                colsc(c) = m > 0.0 ? 1.0 / m : 1.0;
            }
            M = M * colsc.asDiagonal();
            Eigen::VectorXcd x = colsc.asDiagonal() * M.colPivHouseholderQr().solve(rhs);
            M = M * colsc.asDiagonal().inverse();
            // consistency of the overdetermined system
            CHECK((M * x - rhs).norm() < 1e-9 * (rhs.norm() + data_scale(d)));

            Eigen::VectorXcd xc = closed_form_vector(sol);
            double cscale = xc.cwiseAbs().maxCoeff() + data_scale(d);
            for (int c = 0; c < x.size(); ++c)
                CHECK(std::abs(x(c) - xc(c)) < 1e-8 * cscale);

            // value-level spot check through the profile evaluator
            for (Side s : both_sides) {
                const int off = side_index(s) * (2 * dim + 1);
                for (double z : {0.0, 0.37, 1.9}) {
                    for (int J = 0; J < dim; ++J) {
                        cd ls = eval(ProfileTerm::difference(sol.A, sol.B(s), x(off + J)), z) +
                                eval(ProfileTerm::plain(sol.B(s), x(off + dim + J)), z);
                        CHECK(std::abs(ls - sol.velocity(s, J, z)) < 1e-8 * cscale);
                    }
                }
            }
        }
    }
}

TEST_CASE("mode solution profile identities") {
    // ODE residual, divergence, and jump conditions computed through the
    // profile derivative algebra rather than the assembly formulas.
    Rng rng(31);
    for (int dim : {2, 3}) {
        for (const ModeDraw& d : make_draws(dim, rng)) {
            InterfaceModeSolution sol = assemble_mode_system(d.fp, d.lambda, d.xi, d.h, d.k);
            const double A = sol.A;
            const double dscale = data_scale(d);

            for (Side s : both_sides) {
                const double sg = side_sign(s);
                const double rho = d.fp.rho(s), mu = d.fp.mu(s);
                ProfileTerm pres = sol.pressure_term(s);
                std::vector<ProfileTerm> presd = deriv({pres});
                for (int J = 0; J < dim; ++J) {
                    std::vector<ProfileTerm> u = sol.velocity_terms(s, J);
                    std::vector<ProfileTerm> u2 = deriv(deriv(u));
                    for (double z : {0.05, 0.8, 3.2}) {
                        cd uv = 0.0, u2v = 0.0;
                        for (const ProfileTerm& t : u) uv += eval(t, z);
                        for (const ProfileTerm& t : u2) u2v += eval(t, z);
                        cd grad;
                        if (J < dim - 1)
                            grad = cd(0.0, d.xi[J]) * eval(pres, z);
                        else {
                            grad = 0.0;
                            for (const ProfileTerm& t : presd) grad += eval(t, z);
                            grad *= sg;
                        }
                        cd res = rho * d.lambda * uv + mu * (A * A * uv - u2v) + grad;
                        CHECK(std::abs(res) < 1e-9 * (std::abs(rho * d.lambda * uv) +
                                                      mu * A * A * std::abs(uv) +
                                                      mu * std::abs(u2v) + dscale));
                    }
                }
                // divergence along the ray
                for (double z : {0.1, 1.3}) {
                    cd div = 0.0;
                    for (int j = 0; j < dim - 1; ++j) {
                        for (const ProfileTerm& t : sol.velocity_terms(s, j))
                            div += cd(0.0, d.xi[j]) * eval(t, z);
                    }
                    std::vector<ProfileTerm> un = sol.velocity_terms(s, dim - 1);
                    for (const ProfileTerm& t : deriv(un)) div += sg * eval(t, z);
                    CHECK(std::abs(div) < 1e-9 * dscale * (1.0 + A + std::abs(sol.B(s))));
                }
            }

            // interface jumps via trace algebra
            auto trace_of = [&](Side s, int J) {
                cd v = 0.0;
                for (const ProfileTerm& t : sol.velocity_terms(s, J)) v += trace(t);
                return v;
            };
            auto dtrace_of = [&](Side s, int J) {
                cd v = 0.0;
                for (const ProfileTerm& t : sol.velocity_terms(s, J)) v += deriv_trace(t);
                return side_sign(s) * v;
            };
            const double mp = d.fp.mu_plus, mm = d.fp.mu_minus;
            for (int J = 0; J < dim; ++J)
                CHECK(std::abs(trace_of(Side::plus, J) - trace_of(Side::minus, J) - d.k[J]) <
                      1e-10 * dscale);
            for (int j = 0; j < dim - 1; ++j) {
                cd sp = mp * (cd(0.0, d.xi[j]) * trace_of(Side::plus, dim - 1) +
                              dtrace_of(Side::plus, j));
                cd sm = mm * (cd(0.0, d.xi[j]) * trace_of(Side::minus, dim - 1) +
                              dtrace_of(Side::minus, j));
                CHECK(std::abs(sp - sm + d.h[j]) < 1e-9 * dscale);
            }
            cd np = 2.0 * mp * dtrace_of(Side::plus, dim - 1) - sol.pres_plus;
            cd nm = 2.0 * mm * dtrace_of(Side::minus, dim - 1) - sol.pres_minus;
            CHECK(std::abs(np - nm + d.h[dim - 1]) < 1e-9 * dscale);
        }
    }
}

TEST_CASE("constant tangential mode") {
    FluidParams fp{1.0, 1.7, 1.2, 0.4};
    cd lambda(2.0, 1.0);
    std::vector<double> xi{0.0};
    std::vector<cd> h{cd(1.0, 0.5), cd(0.4, -0.8)};
    std::vector<cd> k{cd(-0.3, 0.2), cd(0.0)};
    InterfaceModeSolution sol = assemble_mode_system(fp, lambda, xi, h, k);

    // 1D transmission conditions for the tangential component
    cd jump_u = sol.exp_plus[0] - sol.exp_minus[0];
    CHECK(std::abs(jump_u - k[0]) < 1e-14);
    cd stress = fp.mu_plus * (-sol.B_plus) * sol.exp_plus[0] -
                fp.mu_minus * sol.B_minus * sol.exp_minus[0];
    CHECK(std::abs(stress + h[0]) < 1e-14);
    CHECK(std::abs(sol.exp_plus[1]) == 0.0);

    // normal stress datum is carried by phasewise constant pressures
    CHECK(std::abs(sol.pres_plus - sol.pres_minus - h[1]) < 1e-14);
    CHECK(std::abs(sol.pres_plus + sol.pres_minus) < 1e-14);
    CHECK(std::abs(sol.pressure(Side::plus, 2.3) - sol.pres_plus) < 1e-14);
    CHECK(std::abs(sol.velocity(Side::plus, 1, 0.9)) == 0.0);

    std::vector<cd> bad_k{cd(1.0), cd(0.7)};
    CHECK_THROWS_AS(assemble_mode_system(fp, lambda, xi, h, bad_k), PreconditionError);
}

TEST_CASE("interface correction field assembly") {
    PeriodicGrid g;
    g.dim = 2;
    g.tang_modes = 8;
    g.normal_cells = 16;
    validate(g);
    FluidParams fp{1.0, 1.7, 1.2, 0.4};
    cd lambda(3.0, -2.0);
    const int nt = g.tang_count();

    Rng rng(55);
    std::vector<cd> h(2 * nt), k(2 * nt);
    for (cd& c : h) c = rng.complex_gaussian();
    for (cd& c : k) c = rng.complex_gaussian();
    h[nt + 0] = k[nt + 0] = 0.0; // compatible normal data on the constant mode

    InterfaceCorrection cor = solve_interface_correction(g, fp, lambda, h, k);
    CHECK(cor.zero_mode_dropped == 0.0);
    CHECK(cor.velocity.has_profiles());
    CHECK(cor.velocity.glob(Side::plus) == nullptr);

    for (int t : {1, 5}) {
        std::vector<cd> hm{h[t], h[nt + t]}, km{k[t], k[nt + t]};
        InterfaceModeSolution ms = assemble_mode_system(fp, lambda, g.xi_tang(t), hm, km);
        for (Side s : both_sides)
            for (int c = 0; c < 2; ++c)
                for (double z : {0.0, 0.7})
                    CHECK(std::abs(cor.velocity.eval_mode(s, c, t, side_sign(s) * z) -
                                   ms.velocity(s, c, z)) < 1e-13);
        CHECK(std::abs(cor.pressure.eval_mode(Side::plus, 0, t, 0.4) -
                       ms.pressure(Side::plus, 0.4)) < 1e-13);
    }
    for (int t = 0; t < nt; ++t)
        for (int c = 0; c < 2; ++c)
            CHECK(std::abs(cor.velocity.jump_mode(c, t) - k[static_cast<size_t>(c) * nt + t]) <
                  1e-12);

    // a normal stress datum on the constant mode is absorbed by constant
    // pressures; an incompatible normal velocity jump is projected out
    h[nt + 0] = cd(0.5, 0.0);
    k[nt + 0] = cd(0.25, -0.1);
    InterfaceCorrection cor2 = solve_interface_correction(g, fp, lambda, h, k);
    CHECK(cor2.zero_mode_dropped > 0.0);
    CHECK(cor2.velocity.prof.at(Side::plus, 1, 0).empty());
    cd pj = cor2.pressure.eval_mode(Side::plus, 0, 0, 0.6) -
            cor2.pressure.eval_mode(Side::minus, 0, 0, -0.6);
    CHECK(std::abs(pj - h[nt + 0]) < 1e-14);
}
