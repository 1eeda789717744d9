#include "stokes2p/interface.hpp"

#include "stokes2p/symbols.hpp"

#include <cmath>
#include <stdexcept>

namespace stokes2p {

std::vector<ProfileTerm> InterfaceModeSolution::velocity_terms(Side s, int comp) const {
    const std::vector<cd>& d = s == Side::plus ? diff_plus : diff_minus;
    const std::vector<cd>& e = s == Side::plus ? exp_plus : exp_minus;
    std::vector<ProfileTerm> terms;
    if (d[comp] != cd(0.0))
        terms.push_back(ProfileTerm::difference(A, B(s), d[comp]));
    if (e[comp] != cd(0.0))
        terms.push_back(ProfileTerm::plain(B(s), e[comp]));
    return terms;
}

ProfileTerm InterfaceModeSolution::pressure_term(Side s) const {
    return ProfileTerm::plain(A, s == Side::plus ? pres_plus : pres_minus);
}

cd InterfaceModeSolution::velocity(Side s, int comp, double z) const {
    cd v = 0.0;
    for (const ProfileTerm& t : velocity_terms(s, comp)) v += eval(t, z);
    return v;
}

cd InterfaceModeSolution::pressure(Side s, double z) const {
    return eval(pressure_term(s), z);
}

InterfaceModeSolution assemble_mode_system(const FluidParams& fp, cd lambda,
                                           const std::vector<double>& xi_tang,
                                           const std::vector<cd>& h_jump,
                                           const std::vector<cd>& k_jump) {
    validate(fp);
    const int dim = static_cast<int>(xi_tang.size()) + 1;
    const int n = dim - 1;
    if (static_cast<int>(h_jump.size()) != dim || static_cast<int>(k_jump.size()) != dim)
        throw PreconditionError("assemble_mode_system: jump data must have dim entries");

    double A2 = 0.0;
    for (double x : xi_tang) A2 += x * x;
    const double A = std::sqrt(A2);

    LopatinskiiData lop = make_lopatinskii(fp, lambda, A);
    const cd Bp = lop.B_plus, Bm = lop.B_minus;
    const double mp = fp.mu_plus, mm = fp.mu_minus;
    const cd muB = mp * Bp + mm * Bm;

    InterfaceModeSolution sol;
    sol.dim = dim;
    sol.A = A;
    sol.B_plus = Bp;
    sol.B_minus = Bm;
    sol.diff_plus.assign(dim, cd(0.0));
    sol.diff_minus.assign(dim, cd(0.0));
    sol.exp_plus.assign(dim, cd(0.0));
    sol.exp_minus.assign(dim, cd(0.0));
    sol.pres_plus = sol.pres_minus = 0.0;

    if (A == 0.0) {
        double scale = 0.0;
        for (int J = 0; J < dim; ++J)
            scale = std::max({scale, std::abs(h_jump[J]), std::abs(k_jump[J])});
        if (std::abs(k_jump[n]) > 1e-12 * scale)
            throw PreconditionError(
                "assemble_mode_system: a normal velocity jump on the constant tangential "
                "mode admits no decaying solution");
        for (int j = 0; j < n; ++j) {
            sol.exp_plus[j] = (h_jump[j] + mm * Bm * k_jump[j]) / muB;
            sol.exp_minus[j] = sol.exp_plus[j] - k_jump[j];
        }
        // The normal velocity vanishes on this mode, so the normal stress
        // condition reduces to a pressure jump, met by phasewise constants.
        sol.pres_plus = 0.5 * h_jump[n];
        sol.pres_minus = -0.5 * h_jump[n];
        return sol;
    }

    cd ixh = 0.0, ixk = 0.0; // i xi'.h', i xi'.k'
    for (int j = 0; j < n; ++j) {
        ixh += cd(0.0, xi_tang[j]) * h_jump[j];
        ixk += cd(0.0, xi_tang[j]) * k_jump[j];
    }
    const cd hN = h_jump[n], kN = k_jump[n];

    const cd P = ixh + mm * (Bm + A) * ixk + mm * A * (Bm - A) * kN;
    const cd Q = A * hN + mm * (Bm - A) * ixk + mm * Bm * (Bm + A) * kN;

    const cd ibp = (lop.L11 * P + lop.L12 * Q) / lop.detL; // i xi'.beta_+'
    const cd bpN = (lop.L21 * P + lop.L22 * Q) / lop.detL;
    const cd ibm = ibp - ixk;
    const cd bmN = bpN - kN;

    const cd Fp = -ibp + Bp * bpN;
    const cd Fm = -ibm - Bm * bmN;

    sol.diff_plus[n] = Fp;
    sol.diff_minus[n] = -Fm;
    sol.exp_plus[n] = bpN;
    sol.exp_minus[n] = bmN;
    sol.pres_plus = mp * (Bp + A) * Fp / A;
    sol.pres_minus = mm * (Bm + A) * Fm / A;

    for (int j = 0; j < n; ++j) {
        const cd ixj(0.0, xi_tang[j]);
        sol.diff_plus[j] = -ixj * Fp / A;
        sol.diff_minus[j] = -ixj * Fm / A;
        const cd common =
            h_jump[j] + mm * ixj * kN + (mp - mm) * ixj * bpN - (ixj / A) * (mp * Fp + mm * Fm);
        sol.exp_plus[j] = (common + mm * Bm * k_jump[j]) / muB;
        sol.exp_minus[j] = (common - mp * Bp * k_jump[j]) / muB;
    }
    return sol;
}

InterfaceCorrection solve_interface_correction(const PeriodicGrid& g, const FluidParams& fp,
                                               cd lambda, const std::vector<cd>& h_jump,
                                               const std::vector<cd>& k_jump) {
    const int nt = g.tang_count();
    const int dim = g.dim;
    if (static_cast<int>(h_jump.size()) != dim * nt ||
        static_cast<int>(k_jump.size()) != dim * nt)
        throw PreconditionError("solve_interface_correction: jump arrays must be dim*tang");

    double scale = 0.0;
    for (const cd& c : h_jump) scale = std::max(scale, std::abs(c));
    for (const cd& c : k_jump) scale = std::max(scale, std::abs(c));

    InterfaceCorrection out;
    out.velocity = FlowField::zero(g, dim);
    out.pressure = FlowField::zero(g, 1);
    out.velocity.prof = ProfileSet(dim, nt);
    out.pressure.prof = ProfileSet(1, nt);
    if (scale == 0.0) return out;

    std::vector<cd> hm(dim), km(dim);
    for (int t = 0; t < nt; ++t) {
        for (int J = 0; J < dim; ++J) {
            hm[J] = h_jump[static_cast<size_t>(J) * nt + t];
            km[J] = k_jump[static_cast<size_t>(J) * nt + t];
        }
        if (g.xi_abs(t) == 0.0) {
            double drop = std::abs(km[dim - 1]) / scale;
            out.zero_mode_dropped = std::max(out.zero_mode_dropped, drop);
            km[dim - 1] = 0.0;
        }
        InterfaceModeSolution ms = assemble_mode_system(fp, lambda, g.xi_tang(t), hm, km);
        for (Side s : {Side::plus, Side::minus}) {
            for (int c = 0; c < dim; ++c)
                for (const ProfileTerm& term : ms.velocity_terms(s, c))
                    out.velocity.prof.add(s, c, t, term);
            ProfileTerm pt = ms.pressure_term(s);
            if (pt.coef != cd(0.0)) out.pressure.prof.add(s, 0, t, pt);
        }
    }
    return out;
}

} // namespace stokes2p
