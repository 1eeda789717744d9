#pragma once

#include "stokes2p/common.hpp"

#include <random>
#include <vector>

namespace stokes2p {

/// Deterministic random source for data draws and Monte-Carlo estimates.
/// All randomized entry points take an explicit Rng so runs are reproducible
/// from the config seed alone.
class Rng {
  public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    double uniform(double a, double b) {
        return std::uniform_real_distribution<double>(a, b)(eng_);
    }
    int uniform_int(int a, int b) { return std::uniform_int_distribution<int>(a, b)(eng_); }
    double gaussian(double mean = 0.0, double sd = 1.0) {
        return std::normal_distribution<double>(mean, sd)(eng_);
    }
    cd complex_gaussian() { return cd{gaussian(), gaussian()} / std::sqrt(2.0); }
    /// Uniform on {-1,+1}^n.
    std::vector<double> signs(int n) {
        std::vector<double> s(n);
        for (auto& v : s) v = uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0;
        return s;
    }
    std::mt19937_64& engine() { return eng_; }

  private:
    std::mt19937_64 eng_;
};

} // namespace stokes2p
