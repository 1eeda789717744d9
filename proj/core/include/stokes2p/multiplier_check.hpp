#pragma once

#include <string>
#include <vector>

#include "stokes2p/csv.hpp"
#include "stokes2p/params.hpp"
#include "stokes2p/symbols.hpp"

namespace stokes2p {

/// Sweep layout and finite-difference settings for the multiplier-class
/// checker. The sweep covers the sector boundary rays arg(lambda) =
/// +-(pi - eps) plus the positive real axis, log-spaced magnitudes, and
/// log-spaced tangential frequencies A with a few directions per magnitude.
struct CheckerConfig {
    double eps = pi / 4;
    double lambda_min = 1.0;
    double lambda_max = 1e4;
    double A_min = 1e-3;
    double A_max = 1e3;
    int lambda_per_decade = 3;
    int A_per_decade = 2;
    int directions = 2;
    int max_alpha = 3;
    /// Tangential finite-difference step: fd_step_scale * (1 + A).
    double fd_step_scale = 1e-4;
    /// Log-radius step for the lambda-derivative stencil.
    double du = 1e-3;
    /// Allowed fitted growth of per-decade ratio sups (fraction per decade).
    double growth_tol = 0.10;
    /// Rounding-noise multiplier, in units of machine epsilon, used for the
    /// measurability floor of each finite-difference value.
    double noise_const = 32.0;
    unsigned seed = 1234;
};

/// Sup-ratio summary for one bound shape (type 1 or type 2) over the sweep.
/// Ratios |D^a m| / bound are binned per decade of kappa = |lambda|^{1/2}+A
/// and per decade of the anisotropy kappa/A. A class violation shows up as
/// ratio sups that keep climbing into the last decade; a correct declaration
/// gives sups that level off or decay (saturation toward the sharp constant
/// is not growth). The shape passes when, in both bin families, the last
/// decade's sup stays within (1 + growth_tol) of the largest earlier sup.
/// The fitted log-slopes are kept as diagnostics.
struct ShapeReport {
    double max_ratio = 0.0;
    double slope_kappa = 0.0;
    double slope_aniso = 0.0;
    double tail_kappa = 0.0;
    double tail_aniso = 0.0;
    bool pass = true;
};

struct SymbolVerdict {
    std::string name;
    int declared_type = 1;
    double declared_order = 0.0;
    /// 1 or 2 for the sharpest bound shape that passes, 0 if neither does.
    int verdict_type = 0;
    bool matches_declaration = false;
    ShapeReport type1, type2;
    std::size_t points = 0;
    /// Finite-difference values below the rounding-noise floor; excluded
    /// from the sups because they carry no derivative signal.
    std::size_t skipped = 0;
};

/// Runs the derivative sweep for one symbol at its declared order. Measures
/// all tangential multi-indices |a| <= max_alpha and, for each, both the
/// plain value and lambda d/dlambda. Optionally logs every measurable point
/// to `detail`.
SymbolVerdict check_symbol(const Symbol& s, const CheckerConfig& cfg,
                           CsvWriter* detail = nullptr);

/// Lower-bound fit for the boundary-symbol determinant: the minimum of
/// |detL| / kappa_w^3 with kappa_w = sqrt(max(rho/mu) |lambda|) + A, binned
/// per |lambda| decade so every bin covers the full A range (the normalized
/// determinant is parabolically scale-invariant, so the per-decade minima of
/// a genuine lower bound agree). `c` is the global minimum, `drift` the
/// relative gap between the last decade's minimum and c.
struct DetLFit {
    double c = 0.0;
    double drift = 0.0;
    std::vector<double> decade_min;
};

DetLFit fit_detL_lower_bound(const FluidParams& fp, const CheckerConfig& cfg);

} // namespace stokes2p
