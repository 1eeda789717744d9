#pragma once

#include "stokes2p/grid.hpp"
#include "stokes2p/profile.hpp"

#include <memory>
#include <vector>

namespace stokes2p {

/// Whether the tangential directions of a sampled field hold point values or
/// Fourier coefficients. The normal direction is always point-sampled in
/// TwoPhaseField.
enum class TangSpace { physical, spectral };

/// Multi-component field sampled on both half slabs. Values are stored per
/// side as [component][tangential index][normal index], normal index fastest,
/// where the normal index measures distance from the interface in grid cells
/// (so index 0 is the interface trace on both sides).
struct TwoPhaseField {
    PeriodicGrid grid;
    int ncomp = 1;
    TangSpace space = TangSpace::physical;
    std::vector<cd> plus_vals;
    std::vector<cd> minus_vals;

    static TwoPhaseField zero(const PeriodicGrid& g, int ncomp,
                              TangSpace space = TangSpace::physical);

    size_t index(int c, int t, int i) const {
        return (static_cast<size_t>(c) * grid.tang_count() + t) * grid.half_count() + i;
    }
    cd& at(Side s, int c, int t, int i) {
        return (s == Side::plus ? plus_vals : minus_vals)[index(c, t, i)];
    }
    cd at(Side s, int c, int t, int i) const {
        return (s == Side::plus ? plus_vals : minus_vals)[index(c, t, i)];
    }
    std::vector<cd>& vals(Side s) { return s == Side::plus ? plus_vals : minus_vals; }
    const std::vector<cd>& vals(Side s) const {
        return s == Side::plus ? plus_vals : minus_vals;
    }
};

/// In-place FFT/inverse FFT over the tangential directions of every normal
/// level and component. Physical -> spectral divides by the number of points
/// per direction so spectral entries are Fourier coefficients.
void tangential_transform(TwoPhaseField& f, TangSpace target);

/// Interface jump trace [component][tangential index]: plus trace - minus trace.
std::vector<cd> jump(const TwoPhaseField& f);

/// Multi-component field of Fourier coefficients on the full periodic box
/// (tangential modes x normal modes of the 2 L_N periodic extension), stored
/// [component][tangential mode][normal mode], normal fastest. A coefficient
/// c(t, kn) multiplies exp(i xi'(t).x') exp(i xi_n(kn) x_N).
struct SpectralBoxField {
    PeriodicGrid grid;
    int ncomp = 1;
    std::vector<cd> coef;

    static SpectralBoxField zero(const PeriodicGrid& g, int ncomp);

    size_t index(int c, int t, int kn) const {
        return (static_cast<size_t>(c) * grid.tang_count() + t) * grid.normal_cells + kn;
    }
    cd& at(int c, int t, int kn) { return coef[index(c, t, kn)]; }
    cd at(int c, int t, int kn) const { return coef[index(c, t, kn)]; }

    /// Pointwise value of tangential-mode t, component c at normal position x.
    cd eval_mode(int c, int t, double x) const;

    /// d/dx_N trace values are cheap per mode; full evaluation helpers live in
    /// free functions below.
};

/// Builds box coefficients from side samples that agree at the interface and
/// at the wrap-around plane x_N = +-L_N; `f` must be tangentially spectral.
/// Mismatch above `continuity_tol` (relative to the field scale) throws
/// PreconditionError.
SpectralBoxField merge_to_box(const TwoPhaseField& f, double continuity_tol = 1e-6);

/// Samples box coefficients back onto one side's normal grid for all modes of
/// component c, writing half_count values per tangential mode into `out`
/// (same layout as TwoPhaseField, spectral tangential space).
void sample_side(const SpectralBoxField& g, Side s, int c, int t, cd* out);

/// Structured representation of a solver output on the two half slabs:
/// an optional smooth global part per side (periodic-extension spectrum) plus
/// per-mode closed-form exponential boundary layers. The analytic expression
///   u_side(x', x_N) = glob_side(x', x_N) + sum_terms term(|x_N|) e^{i xi'. x'}
/// is what all residual and pairing computations evaluate; it is defined for
/// every x_N, with the global part understood as 2 L_N periodic.
struct FlowField {
    PeriodicGrid grid;
    int ncomp = 1;
    std::shared_ptr<const SpectralBoxField> glob_plus;  // may be null or shared
    std::shared_ptr<const SpectralBoxField> glob_minus; // may be null or shared
    ProfileSet prof;                                    // may be empty

    static FlowField zero(const PeriodicGrid& g, int ncomp);

    const SpectralBoxField* glob(Side s) const {
        return (s == Side::plus ? glob_plus : glob_minus).get();
    }
    bool has_profiles() const { return !prof.empty(); }

    /// Value of tangential mode t, component c at signed normal position xn
    /// (side must match the sign of xn; xn = 0 gives the side's trace).
    cd eval_mode(Side s, int c, int t, double xn) const;

    /// Interface trace of mode (c, t) on side s.
    cd trace_mode(Side s, int c, int t) const;

    /// Plus trace minus minus trace of mode (c, t).
    cd jump_mode(int c, int t) const;
};

/// Samples the analytic expression on the grid (tangentially spectral output).
TwoPhaseField materialize(const FlowField& f);

/// Field algebra. Grids and component counts must match.
FlowField add(const FlowField& a, const FlowField& b);
FlowField scale(const FlowField& a, cd factor);

/// Tangential derivative d/dx_j (j < dim-1) of the analytic expression.
FlowField deriv_tang(const FlowField& f, int j);

/// Normal derivative d/dx_N of the analytic expression.
FlowField deriv_xn(const FlowField& f);

/// Extracts a single component as a new 1-component field.
FlowField component(const FlowField& f, int c);

/// Stacks 1-component fields into a multi-component field.
FlowField stack(const std::vector<FlowField>& comps);

} // namespace stokes2p
