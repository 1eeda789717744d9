#include "stokes2p/multiplier_check.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "stokes2p/numerics.hpp"
#include "stokes2p/rng.hpp"

namespace stokes2p {

namespace {

std::vector<double> log_spaced(double lo, double hi, int per_decade) {
    const double decades = std::log10(hi / lo);
    const int n = static_cast<int>(std::lround(decades * per_decade)) + 1;
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = lo * std::pow(10.0, static_cast<double>(i) / per_decade);
    v.back() = hi;
    return v;
}

// Per-decade sup accumulator with a least-squares log-growth fit.
class BinSup {
  public:
    void add(int bin, double r) {
        auto& s = sup_[bin];
        s = std::max(s, r);
    }
    double slope() const {
        std::vector<double> xs, ys;
        for (const auto& [b, s] : sup_) {
            if (s <= 0) continue;
            xs.push_back(b);
            ys.push_back(std::log(s));
        }
        if (xs.size() < 2) return 0.0;
        double mx = 0, my = 0;
        for (size_t i = 0; i < xs.size(); ++i) { mx += xs[i]; my += ys[i]; }
        mx /= xs.size();
        my /= ys.size();
        double num = 0, den = 0;
        for (size_t i = 0; i < xs.size(); ++i) {
            num += (xs[i] - mx) * (ys[i] - my);
            den += (xs[i] - mx) * (xs[i] - mx);
        }
        return den > 0 ? num / den : 0.0;
    }
    // Last-decade sup relative to the best earlier decade; 1 when flat.
    double tail_ratio() const {
        if (sup_.size() < 2) return 1.0;
        double before = 0.0;
        auto last = std::prev(sup_.end());
        for (auto it = sup_.begin(); it != last; ++it)
            before = std::max(before, it->second);
        return before > 0 ? last->second / before : 1.0;
    }

  private:
    std::map<int, double> sup_;
};

struct ShapeAccum {
    double max_ratio = 0.0;
    BinSup by_kappa, by_aniso;
    // Cell sups on the (kappa decade, anisotropy decade) lattice. The sweep
    // symbols are parabolically homogeneous, so the ratio depends on the
    // anisotropy profile alone when the declaration is correct: rows are flat
    // in kappa and columns level off in aniso. Misdeclared order grows along
    // rows, misdeclared type grows along columns.
    std::map<std::pair<int, int>, double> cells;

    void add(double r, int bin_kappa, int bin_aniso) {
        max_ratio = std::max(max_ratio, r);
        by_kappa.add(bin_kappa, r);
        by_aniso.add(bin_aniso, r);
        auto& c = cells[{bin_aniso, bin_kappa}];
        c = std::max(c, r);
    }

    // Max over lines (rows keyed by `major`) of the last cell's sup relative
    // to the best earlier cell on the same line.
    static double line_tail(const std::map<std::pair<int, int>, double>& sup) {
        double worst = 1.0;
        auto it = sup.begin();
        while (it != sup.end()) {
            const int key = it->first.first;
            double before = 0.0, last = 0.0;
            int n = 0;
            for (; it != sup.end() && it->first.first == key; ++it, ++n) {
                before = std::max(before, last);
                last = it->second;
            }
            if (n >= 2 && before > 0) worst = std::max(worst, last / before);
        }
        return worst;
    }

    ShapeReport report(double growth_tol) const {
        ShapeReport rep;
        rep.max_ratio = max_ratio;
        rep.slope_kappa = by_kappa.slope();
        rep.slope_aniso = by_aniso.slope();
        rep.tail_kappa = line_tail(cells);
        std::map<std::pair<int, int>, double> transposed;
        for (const auto& [key, r] : cells) transposed[{key.second, key.first}] = r;
        rep.tail_aniso = line_tail(transposed);
        rep.pass = rep.tail_kappa <= 1.0 + growth_tol && rep.tail_aniso <= 1.0 + growth_tol;
        return rep;
    }
};

// Tensor-product finite-difference value of D_xi^(a1,a2) (lambda d/dlambda)^l m
// at (xi0, la0). Nodes along each active axis form a 7-point uniform stencil;
// la moves by factors e^{k du} so the sample stays on its ray. Returns the
// stencil value and fills the rounding-noise amplification (sum of absolute
// weight products) and the local magnitude of m.
cd fd_value(const Symbol& s, const std::array<double, 2>& xi0, cd la0, int a1,
            int a2, int l, double h, double du, double& wsum, double& m_loc) {
    static const std::vector<double> one{1.0};
    const int n = 7, c = 3;
    const std::vector<double> w1 = a1 ? fd_weights_uniform(n, a1, h, c) : one;
    const std::vector<double> w2 = a2 ? fd_weights_uniform(n, a2, h, c) : one;
    const std::vector<double> wu = l ? fd_weights_uniform(n, l, du, c) : one;
    const int o1 = a1 ? c : 0, o2 = a2 ? c : 0, ou = l ? c : 0;

    cd value = 0;
    m_loc = 0;
    for (size_t i = 0; i < w1.size(); ++i)
        for (size_t j = 0; j < w2.size(); ++j)
            for (size_t k = 0; k < wu.size(); ++k) {
                std::array<double, 2> xi{xi0[0] + (static_cast<int>(i) - o1) * h,
                                         xi0[1] + (static_cast<int>(j) - o2) * h};
                cd la = la0 * std::exp((static_cast<int>(k) - ou) * du);
                cd m = s.eval(xi, la);
                m_loc = std::max(m_loc, std::abs(m));
                value += w1[i] * w2[j] * wu[k] * m;
            }
    auto abs_sum = [](const std::vector<double>& w) {
        double t = 0;
        for (double x : w) t += std::abs(x);
        return t;
    };
    wsum = abs_sum(w1) * abs_sum(w2) * abs_sum(wu);
    return value;
}

} // namespace

SymbolVerdict check_symbol(const Symbol& s, const CheckerConfig& cfg, CsvWriter* detail) {
    SymbolVerdict v;
    v.name = s.name;
    v.declared_type = s.declared_type;
    v.declared_order = s.declared_order;

    const auto lambdas = log_spaced(cfg.lambda_min, cfg.lambda_max, cfg.lambda_per_decade);
    const auto As = log_spaced(cfg.A_min, cfg.A_max, cfg.A_per_decade);
    const std::array<double, 3> args{pi - cfg.eps, -(pi - cfg.eps), 0.0};

    Rng rng(cfg.seed);
    std::vector<double> angles(cfg.directions);
    for (double& a : angles) a = rng.uniform(0.15, pi / 2 - 0.15);

    std::vector<std::array<int, 2>> alphas;
    for (int a1 = 0; a1 <= cfg.max_alpha; ++a1)
        for (int a2 = 0; a1 + a2 <= cfg.max_alpha; ++a2) alphas.push_back({a1, a2});

    const double eps_mach = std::numeric_limits<double>::epsilon();
    ShapeAccum acc1, acc2;

    for (double arg : args)
        for (double r : lambdas) {
            const cd la = std::polar(r, arg);
            for (double A : As) {
                const double h = cfg.fd_step_scale * (1.0 + A);
                const double kappa = std::sqrt(r) + A;
                const int bk = static_cast<int>(std::floor(std::log10(kappa) + 1e-9));
                const int ba =
                    static_cast<int>(std::floor(std::log10(kappa / A) + 1e-9));
                for (double phi : angles) {
                    const std::array<double, 2> xi{A * std::cos(phi), A * std::sin(phi)};
                    for (const auto& al : alphas)
                        for (int l = 0; l <= 1; ++l) {
                            ++v.points;
                            double wsum = 0, m_loc = 0;
                            const cd fd = fd_value(s, xi, la, al[0], al[1], l, h,
                                                   cfg.du, wsum, m_loc);
                            const double floor_ = cfg.noise_const * eps_mach * wsum * m_loc;
                            const double mag = std::abs(fd);
                            if (mag <= 4.0 * floor_) {
                                ++v.skipped;
                                continue;
                            }
                            const int aa = al[0] + al[1];
                            const double r1 =
                                mag / std::pow(kappa, s.declared_order - aa);
                            const double r2 = mag / (std::pow(kappa, s.declared_order)
                                                     * std::pow(A, -aa));
                            acc1.add(r1, bk, ba);
                            acc2.add(r2, bk, ba);
                            if (detail)
                                detail->row(s.name, A, r, arg, al[0], al[1], l, mag,
                                            floor_, r1, r2, kappa);
                        }
                }
            }
        }

    v.type1 = acc1.report(cfg.growth_tol);
    v.type2 = acc2.report(cfg.growth_tol);
    v.verdict_type = v.type1.pass ? 1 : (v.type2.pass ? 2 : 0);
    v.matches_declaration = v.verdict_type == s.declared_type;
    return v;
}

DetLFit fit_detL_lower_bound(const FluidParams& fp, const CheckerConfig& cfg) {
    const auto lambdas = log_spaced(cfg.lambda_min, cfg.lambda_max, cfg.lambda_per_decade);
    const auto As = log_spaced(cfg.A_min, cfg.A_max, cfg.A_per_decade);
    const std::array<double, 3> args{pi - cfg.eps, -(pi - cfg.eps), 0.0};
    const double rm_max = std::max(fp.rho_plus / fp.mu_plus, fp.rho_minus / fp.mu_minus);

    std::map<int, double> dec_min;
    for (double arg : args)
        for (double r : lambdas)
            for (double A : As) {
                const auto d = make_lopatinskii(fp, std::polar(r, arg), A);
                const double kw = std::sqrt(rm_max * r) + A;
                const double q = std::abs(d.detL) / (kw * kw * kw);
                // Endpoint lambda joins the last full decade so every bin
                // sees the whole anisotropy profile.
                const int ndec = std::max(
                    1, static_cast<int>(std::lround(std::log10(cfg.lambda_max / cfg.lambda_min))));
                const int bin = std::min(
                    ndec - 1,
                    static_cast<int>(std::floor(std::log10(r / cfg.lambda_min) + 1e-9)));
                auto it = dec_min.find(bin);
                if (it == dec_min.end())
                    dec_min[bin] = q;
                else
                    it->second = std::min(it->second, q);
            }

    DetLFit fit;
    fit.c = std::numeric_limits<double>::infinity();
    for (const auto& [b, q] : dec_min) {
        fit.decade_min.push_back(q);
        fit.c = std::min(fit.c, q);
    }
    if (!dec_min.empty())
        fit.drift = std::abs(dec_min.rbegin()->second - fit.c) / fit.c;
    return fit;
}

} // namespace stokes2p
