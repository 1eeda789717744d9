#include "stokes2p/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace stokes2p {

namespace {

// 15-point Kronrod extension of 7-point Gauss (nodes on [0,1] half, symmetric)
constexpr double xgk[8] = {0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
                           0.7415311855993945, 0.5860872354676911, 0.4058451513773972,
                           0.2077849550078985, 0.0};
constexpr double wgk[8] = {0.0229353220105292, 0.0630920926299785, 0.1047900103222502,
                           0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
                           0.2044329400752989, 0.2094821410847278};
constexpr double wg[4] = {0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
                          0.4179591836734694};

struct Panel {
    double a, b;
    cd value;
    double err;
};

Panel gk15(const std::function<cd(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    cd kron{}, gauss{};
    for (int i = 0; i < 8; ++i) {
        const cd fp = f(c + h * xgk[i]);
        const cd sum = i == 7 ? fp : fp + f(c - h * xgk[i]); // i == 7 is the center node
        kron += wgk[i] * sum;
        if (i % 2 == 1) gauss += wg[i / 2] * sum; // odd Kronrod indices are Gauss nodes
    }
    kron *= h;
    gauss *= h;
    return Panel{a, b, kron, std::abs(kron - gauss)};
}

} // namespace

QuadResult adaptive_gk15(const std::function<cd(double)>& f, double a, double b,
                         double abs_tol, double rel_tol, int max_subdiv) {
    QuadResult res;
    if (a == b) {
        res.converged = true;
        return res;
    }
    auto cmp = [](const Panel& x, const Panel& y) { return x.err < y.err; };
    std::priority_queue<Panel, std::vector<Panel>, decltype(cmp)> heap(cmp);
    Panel p0 = gk15(f, a, b);
    res.evaluations = 15;
    cd total = p0.value;
    double toterr = p0.err;
    heap.push(p0);
    int splits = 0;
    while (splits < max_subdiv) {
        const double tol = std::max(abs_tol, rel_tol * std::abs(total));
        if (toterr <= tol) break;
        Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid == worst.a || mid == worst.b) break; // interval exhausted
        Panel left = gk15(f, worst.a, mid);
        Panel right = gk15(f, mid, worst.b);
        res.evaluations += 30;
        total += left.value + right.value - worst.value;
        toterr += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
        ++splits;
    }
    res.value = total;
    res.abs_error = toterr;
    res.converged = toterr <= std::max(abs_tol, rel_tol * std::abs(total));
    return res;
}

QuadResult integrate_to_infinity(const std::function<cd(double)>& f, double a,
                                 double decay_rate, double abs_tol, double osc_wavenumber) {
    if (!(decay_rate > 0.0))
        throw PreconditionError("integrate_to_infinity needs a positive decay rate");
    // Panel width resolves both the decay scale and the oscillation period.
    double width = 1.0 / decay_rate;
    if (osc_wavenumber > 0.0) width = std::min(width, pi / osc_wavenumber);

    QuadResult res;
    double lo = a;
    cd total{};
    double toterr = 0.0;
    const int max_panels = 400;
    bool tail_small = false;
    for (int k = 0; k < max_panels; ++k) {
        const double hi = lo + width;
        QuadResult panel = adaptive_gk15(f, lo, hi, 0.25 * abs_tol, 0.0, 200);
        total += panel.value;
        toterr += panel.abs_error;
        res.evaluations += panel.evaluations;
        // after a few decay lengths, stop when panels become negligible
        if (std::abs(panel.value) < 0.25 * abs_tol && (hi - a) * decay_rate > 3.0) {
            tail_small = true;
            break;
        }
        lo = hi;
        if (osc_wavenumber <= 0.0 || width < 4.0 / decay_rate) width *= 1.6;
    }
    res.value = total;
    res.abs_error = toterr;
    res.converged = tail_small && toterr <= abs_tol;
    return res;
}

} // namespace stokes2p
