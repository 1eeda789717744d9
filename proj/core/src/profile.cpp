#include "stokes2p/profile.hpp"

#include <cmath>

namespace stokes2p {

cd phi1m(cd w) {
    if (std::abs(w) < 1e-4) {
        // 1 - w/2 + w^2/6 - w^3/24 + w^4/120, remainder below 1e-22
        return 1.0 + w * (-0.5 + w * (1.0 / 6.0 + w * (-1.0 / 24.0 + w / 120.0)));
    }
    return (1.0 - std::exp(-w)) / w;
}

cd eval(const ProfileTerm& t, double z) {
    if (!t.diff) return t.coef * std::exp(-t.kappa1 * z);
    const cd w = (t.kappa2 - t.kappa1) * z;
    return t.coef * z * std::exp(-t.kappa1 * z) * phi1m(w);
}

cd trace(const ProfileTerm& t) { return t.diff ? cd{0.0, 0.0} : t.coef; }

void append_deriv(const ProfileTerm& t, std::vector<ProfileTerm>& out) {
    if (!t.diff) {
        out.push_back(ProfileTerm::plain(t.kappa1, -t.kappa1 * t.coef));
        return;
    }
    // d/dz [c (e^{-k1 z} - e^{-k2 z})/(k2-k1)] = -k1 * same + c e^{-k2 z}
    out.push_back(ProfileTerm::difference(t.kappa1, t.kappa2, -t.kappa1 * t.coef));
    out.push_back(ProfileTerm::plain(t.kappa2, t.coef));
}

std::vector<ProfileTerm> deriv(const std::vector<ProfileTerm>& terms) {
    std::vector<ProfileTerm> out;
    out.reserve(2 * terms.size());
    for (const auto& t : terms) append_deriv(t, out);
    return out;
}

cd deriv_trace(const ProfileTerm& t) {
    return t.diff ? t.coef : -t.kappa1 * t.coef;
}

void append_tail_integral(const ProfileTerm& t, std::vector<ProfileTerm>& out) {
    if (!t.diff) {
        out.push_back(ProfileTerm::plain(t.kappa1, t.coef / t.kappa1));
        return;
    }
    // int_z^inf c (e^{-k1 s} - e^{-k2 s})/(k2-k1) ds
    //   = (c/k1) (e^{-k1 z} - e^{-k2 z})/(k2-k1) + c/(k1 k2) e^{-k2 z}
    out.push_back(ProfileTerm::difference(t.kappa1, t.kappa2, t.coef / t.kappa1));
    out.push_back(ProfileTerm::plain(t.kappa2, t.coef / (t.kappa1 * t.kappa2)));
}

std::vector<ProfileTerm> tail_integral(const std::vector<ProfileTerm>& terms) {
    std::vector<ProfileTerm> out;
    out.reserve(2 * terms.size());
    for (const auto& t : terms) append_tail_integral(t, out);
    return out;
}

ProfileTerm exp_shift(const ProfileTerm& t, cd shift) {
    ProfileTerm r = t;
    r.kappa1 += shift;
    r.kappa2 += shift;
    return r;
}

ProfileTerm conj_term(const ProfileTerm& t) {
    return {std::conj(t.coef), std::conj(t.kappa1), std::conj(t.kappa2), t.diff};
}

cd integrate_infinite(const ProfileTerm& t, cd s) {
    if (!t.diff) return t.coef / (t.kappa1 + s);
    return t.coef / ((t.kappa1 + s) * (t.kappa2 + s));
}

cd pair_integral_infinite(const ProfileTerm& t1, const ProfileTerm& t2) {
    const cd c = t1.coef * t2.coef;
    if (!t1.diff && !t2.diff) return c / (t1.kappa1 + t2.kappa1);
    if (!t1.diff) return c / ((t1.kappa1 + t2.kappa1) * (t1.kappa1 + t2.kappa2));
    if (!t2.diff) return c / ((t2.kappa1 + t1.kappa1) * (t2.kappa1 + t1.kappa2));
    const cd a1 = t1.kappa1, a2 = t1.kappa2, b1 = t2.kappa1, b2 = t2.kappa2;
    // Partial-fraction sum collapses to a cancellation-free rational form.
    return c * (a1 + a2 + b1 + b2) / ((a1 + b1) * (a1 + b2) * (a2 + b1) * (a2 + b2));
}

namespace {

// I_n(p, L) = integral of z^n exp(-p z) over (0, L), n = 0..4.
void powers_exp_integrals(cd p, double L, cd out[5]) {
    if (std::abs(p) * L < 0.5) {
        // I_n = L^{n+1} sum_j (-pL)^j / (j! (n+j+1))
        for (int n = 0; n <= 4; ++n) {
            cd sum = 0.0, term = 1.0;
            for (int j = 0; j < 24; ++j) {
                sum += term / static_cast<double>(n + j + 1);
                term *= -p * L / static_cast<double>(j + 1);
                if (std::abs(term) < 1e-18) break;
            }
            out[n] = std::pow(L, n + 1) * sum;
        }
        return;
    }
    const cd e = std::exp(-p * L);
    out[0] = (1.0 - e) / p;
    double Ln = 1.0;
    for (int n = 1; n <= 4; ++n) {
        Ln *= L;
        out[n] = (static_cast<double>(n) * out[n - 1] - Ln * e) / p;
    }
}

} // namespace

cd integrate_finite(const ProfileTerm& t, cd s, double L) {
    const cd p1 = t.kappa1 + s;
    if (!t.diff) {
        if (std::abs(p1) * L < 0.5) {
            cd I[5];
            powers_exp_integrals(p1, L, I);
            return t.coef * I[0];
        }
        return t.coef * (1.0 - std::exp(-p1 * L)) / p1;
    }
    const cd d = t.kappa2 - t.kappa1;
    if (std::abs(d) * L > 1e-3) {
        const cd p2 = t.kappa2 + s;
        cd I1, I2;
        if (std::abs(p1) * L < 0.5) {
            cd I[5];
            powers_exp_integrals(p1, L, I);
            I1 = I[0];
        } else {
            I1 = (1.0 - std::exp(-p1 * L)) / p1;
        }
        if (std::abs(p2) * L < 0.5) {
            cd I[5];
            powers_exp_integrals(p2, L, I);
            I2 = I[0];
        } else {
            I2 = (1.0 - std::exp(-p2 * L)) / p2;
        }
        return t.coef * (I1 - I2) / d;
    }
    // Near-confluent rates: expand (e^{-k1 z}-e^{-k2 z})/(k2-k1) =
    // sum_m (-d)^m z^{m+1} e^{-(k1+s) z} / (m+1)! under the integral.
    cd I[5];
    powers_exp_integrals(p1, L, I);
    cd sum = 0.0, dm = 1.0;
    double fact = 1.0;
    for (int m = 0; m <= 3; ++m) {
        fact *= (m + 1);
        sum += dm * I[m + 1] / fact;
        dm *= -d;
    }
    return t.coef * sum;
}

void shift_terms(const ProfileTerm& t, double L, std::vector<ProfileTerm>& out) {
    if (!t.diff) {
        out.push_back(ProfileTerm::plain(t.kappa1, t.coef * std::exp(-t.kappa1 * L)));
        return;
    }
    // c (e^{-k1(L+w)} - e^{-k2(L+w)})/(k2-k1)
    //   = e^{-k1 L} c (e^{-k1 w} - e^{-k2 w})/(k2-k1) + t(L) e^{-k2 w}
    out.push_back(ProfileTerm::difference(t.kappa1, t.kappa2, t.coef * std::exp(-t.kappa1 * L)));
    out.push_back(ProfileTerm::plain(t.kappa2, eval(t, L)));
}

cd pair_integral_finite(const ProfileTerm& t1, const ProfileTerm& t2, double L) {
    // A plain factor folds into the exponential weight of integrate_finite,
    // which stays exact for non-decaying (even zero) rates.
    if (!t1.diff) return t1.coef * integrate_finite(t2, t1.kappa1, L);
    if (!t2.diff) return t2.coef * integrate_finite(t1, t2.kappa1, L);
    cd full = pair_integral_infinite(t1, t2);
    std::vector<ProfileTerm> s1, s2;
    shift_terms(t1, L, s1);
    shift_terms(t2, L, s2);
    for (const auto& a : s1)
        for (const auto& b : s2) full -= pair_integral_infinite(a, b);
    return full;
}

double amp_bound(const ProfileTerm& t) {
    if (!t.diff) return std::abs(t.coef);
    const double rmin = std::min(t.kappa1.real(), t.kappa2.real());
    if (rmin <= 0.0) return std::abs(t.coef) * 1e30;
    // sup_z z e^{-r z} = 1/(e r); |phi1m| <= 1 when both rates decay.
    return std::abs(t.coef) / (std::exp(1.0) * rmin);
}

void ProfileSet::prune(double tol, double scale) {
    const double cutoff = tol * scale;
    for (auto& list : terms_) {
        std::erase_if(list, [&](const ProfileTerm& t) { return amp_bound(t) < cutoff; });
    }
}

} // namespace stokes2p
