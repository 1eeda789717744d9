#include "stokes2p/numerics.hpp"

#include <algorithm>

namespace stokes2p {

void fd_weights(double x0, const double* x, int n, int m, double* w) {
    // Fornberg's recursion; c[i][j] = weight of node i for the j-th derivative.
    std::vector<double> c(static_cast<size_t>(n) * (m + 1), 0.0);
    auto C = [&](int i, int j) -> double& { return c[static_cast<size_t>(i) * (m + 1) + j]; };
    double c1 = 1.0;
    double c4 = x[0] - x0;
    C(0, 0) = 1.0;
    for (int i = 1; i < n; ++i) {
        const int mn = std::min(i, m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = x[i] - x0;
        for (int j = 0; j < i; ++j) {
            const double c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    C(i, k) = c1 * (k * C(i - 1, k - 1) - c5 * C(i - 1, k)) / c2;
                C(i, 0) = -c1 * c5 * C(i - 1, 0) / c2;
            }
            for (int k = mn; k >= 1; --k) C(j, k) = (c4 * C(j, k) - k * C(j, k - 1)) / c3;
            C(j, 0) = c4 * C(j, 0) / c3;
        }
        c1 = c2;
    }
    for (int i = 0; i < n; ++i) w[i] = C(i, m);
}

std::vector<double> fd_weights_uniform(int n, int m, double h, int at) {
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = i * h;
    std::vector<double> w(n);
    fd_weights(at * h, x.data(), n, m, w.data());
    return w;
}

} // namespace stokes2p
