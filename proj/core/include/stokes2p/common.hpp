#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace stokes2p {

using cd = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr cd iu{0.0, 1.0};

/// Thrown when a run configuration is structurally invalid (unknown key,
/// missing field, out-of-range value). The CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown when input data violates a documented precondition of an operator
/// (e.g. nonzero mean handed to a solver that requires mean-free data).
struct PreconditionError : std::invalid_argument {
    explicit PreconditionError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Phase label for the two half spaces separated by {x_N = 0}.
/// `plus` is the upper half space {x_N > 0}.
enum class Side { plus = 0, minus = 1 };

inline constexpr Side both_sides[2] = {Side::plus, Side::minus};

inline constexpr int side_index(Side s) { return static_cast<int>(s); }
inline constexpr double side_sign(Side s) { return s == Side::plus ? 1.0 : -1.0; }
inline constexpr Side other_side(Side s) { return s == Side::plus ? Side::minus : Side::plus; }

} // namespace stokes2p
