#include "stokes2p/symbols.hpp"

#include <cmath>
#include <stdexcept>

#include "stokes2p/log.hpp"

namespace stokes2p {

cd eval_B(double rho, double mu, cd lambda, double A) {
    if (lambda == cd{0.0, 0.0})
        throw std::domain_error("eval_B: lambda = 0 is outside the resolvent set");
    return std::sqrt((rho / mu) * lambda + A * A);
}

LopatinskiiData make_lopatinskii(const FluidParams& fp, cd lambda, double A) {
    LopatinskiiData d;
    d.A = A;
    const double mp = fp.mu_plus, mm = fp.mu_minus;
    const cd Bp = eval_B(fp.rho_plus, mp, lambda, A);
    const cd Bm = eval_B(fp.rho_minus, mm, lambda, A);
    d.B_plus = Bp;
    d.B_minus = Bm;

    d.M11 = mp * (Bp + A) + mm * (Bm + A);
    d.M12 = -mp * A * (Bp - A) + mm * A * (Bm - A);
    d.M21 = -mp * (Bp - A) + mm * (Bm - A);
    d.M22 = mp * Bp * (Bp + A) + mm * Bm * (Bm + A);

    d.L11 = d.M22;
    d.L12 = -d.M12;
    d.L21 = -d.M21;
    d.L22 = d.M11;

    // Expanded determinant: every coefficient of A^k is a positive-real
    // combination on the sector, so no catastrophic cancellation occurs.
    const cd muB = mp * Bp + mm * Bm;
    d.detL = -(mp - mm) * (mp - mm) * (A * A * A)
           + ((3.0 * mp - mm) * mp * Bp + (3.0 * mm - mp) * mm * Bm) * (A * A)
           + (muB * muB + mp * mm * (Bp + Bm) * (Bp + Bm)) * A
           + muB * (mp * Bp * Bp + mm * Bm * Bm);

    const double kappa = std::sqrt(std::abs(lambda)
                                   * std::max(fp.rho_plus / mp, fp.rho_minus / mm))
                       + A;
    const double scale = (mp + mm) * (mp + mm) * kappa * kappa * kappa;
    d.near_singular = std::abs(d.detL) < 1e-14 * scale;
    if (d.near_singular)
        log()->warn("boundary symbol nearly singular: |detL| = {:.3e}, scale = {:.3e}",
                    std::abs(d.detL), scale);
    return d;
}

cd eval_M(double A, cd B, double a) { return eval(m_profile(A, B, 1.0), a); }

ProfileTerm m_profile(double A, cd B, cd coef) {
    return ProfileTerm::difference(A, B, -coef);
}

Symbol symbol_product(const Symbol& a, const Symbol& b) {
    Symbol p;
    p.name = a.name + "*" + b.name;
    p.declared_type = std::max(a.declared_type, b.declared_type);
    p.declared_order = a.declared_order + b.declared_order;
    auto ea = a.eval, eb = b.eval;
    p.eval = [ea, eb](const std::array<double, 2>& xi, cd lambda) {
        return ea(xi, lambda) * eb(xi, lambda);
    };
    return p;
}

namespace {

double abs_xi(const std::array<double, 2>& xi) { return std::hypot(xi[0], xi[1]); }

} // namespace

std::vector<Symbol> stock_symbols(const FluidParams& fp) {
    validate(fp);
    const double rp = fp.rho_plus, rm = fp.rho_minus;
    const double mp = fp.mu_plus, mm = fp.mu_minus;

    auto Bp = [rp, mp](const std::array<double, 2>& xi, cd la) {
        return eval_B(rp, mp, la, abs_xi(xi));
    };
    auto Bm = [rm, mm](const std::array<double, 2>& xi, cd la) {
        return eval_B(rm, mm, la, abs_xi(xi));
    };
    auto lop = [fp](const std::array<double, 2>& xi, cd la) {
        return make_lopatinskii(fp, la, abs_xi(xi));
    };

    std::vector<Symbol> out;
    auto add = [&out](const char* name, int type, double order, auto fn) {
        Symbol s;
        s.name = name;
        s.declared_type = type;
        s.declared_order = order;
        s.eval = fn;
        out.push_back(std::move(s));
    };

    add("i_xi_1", 1, 1, [](const std::array<double, 2>& xi, cd) { return iu * xi[0]; });
    add("lambda_half", 1, 1,
        [](const std::array<double, 2>&, cd la) { return std::sqrt(la); });
    add("B_plus", 1, 1, Bp);
    add("B_minus", 1, 1, Bm);
    add("A", 2, 1, [](const std::array<double, 2>& xi, cd) { return cd(abs_xi(xi)); });
    add("i_xi_1_over_A", 2, 0,
        [](const std::array<double, 2>& xi, cd) { return iu * xi[0] / abs_xi(xi); });
    add("inv_A_plus_B_plus", 2, -1, [Bp](const std::array<double, 2>& xi, cd la) {
        return 1.0 / (abs_xi(xi) + Bp(xi, la));
    });
    add("A_plus_B_plus_sq", 2, 2, [Bp](const std::array<double, 2>& xi, cd la) {
        cd s = abs_xi(xi) + Bp(xi, la);
        return s * s;
    });
    add("L11", 2, 2,
        [lop](const std::array<double, 2>& xi, cd la) { return lop(xi, la).L11; });
    add("L12", 2, 2,
        [lop](const std::array<double, 2>& xi, cd la) { return lop(xi, la).L12; });
    add("L21", 2, 1,
        [lop](const std::array<double, 2>& xi, cd la) { return lop(xi, la).L21; });
    add("L22", 2, 1,
        [lop](const std::array<double, 2>& xi, cd la) { return lop(xi, la).L22; });
    add("detL", 2, 3,
        [lop](const std::array<double, 2>& xi, cd la) { return lop(xi, la).detL; });
    add("inv_detL", 2, -3,
        [lop](const std::array<double, 2>& xi, cd la) { return 1.0 / lop(xi, la).detL; });

    add("inv_muB_sum", 1, -1, [Bp, Bm, mp, mm](const std::array<double, 2>& xi, cd la) {
        return 1.0 / (mp * Bp(xi, la) + mm * Bm(xi, la));
    });
    add("muB_minus_ratio", 1, 0, [Bp, Bm, mp, mm](const std::array<double, 2>& xi, cd la) {
        cd bm = mm * Bm(xi, la);
        return bm / (mp * Bp(xi, la) + bm);
    });

    // Coefficient functions of the interface solution formulas on unit data
    // slots: a normal-stress jump slot gives (P, Q) = (0, A), a tangential
    // slot j = 1 gives (P, Q) = (i xi_1, 0).
    add("coef_hN_tang_M", 2, -1, [lop](const std::array<double, 2>& xi, cd la) {
        auto d = lop(xi, la);
        return (d.B_plus * d.L22 - d.L12) / d.detL;
    });
    add("coef_h1_tang_M", 2, -1, [lop](const std::array<double, 2>& xi, cd la) {
        auto d = lop(xi, la);
        return iu * xi[0] * (d.B_plus * d.L21 - d.L11) / (d.A * d.detL);
    });
    add("coef_hN_exp_coupling", 2, -1,
        [lop, Bp, Bm, mp, mm](const std::array<double, 2>& xi, cd la) {
            auto d = lop(xi, la);
            cd muB = mp * Bp(xi, la) + mm * Bm(xi, la);
            return iu * xi[0] * d.A * d.L22 / (muB * d.detL);
        });
    add("coef_hN_mixed_F", 2, -1,
        [lop, Bp, Bm, mp, mm](const std::array<double, 2>& xi, cd la) {
            auto d = lop(xi, la);
            cd muB = mp * Bp(xi, la) + mm * Bm(xi, la);
            cd fsum = mp * (d.B_plus * d.L22 - d.L12) - mm * (d.L12 + d.B_minus * d.L22);
            return iu * xi[0] * fsum / (muB * d.detL);
        });

    return out;
}

} // namespace stokes2p
