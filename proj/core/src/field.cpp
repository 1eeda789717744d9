#include "stokes2p/field.hpp"

#include "stokes2p/fft.hpp"

#include <algorithm>
#include <cmath>

namespace stokes2p {

TwoPhaseField TwoPhaseField::zero(const PeriodicGrid& g, int ncomp, TangSpace space) {
    TwoPhaseField f;
    f.grid = g;
    f.ncomp = ncomp;
    f.space = space;
    const size_t n = static_cast<size_t>(ncomp) * g.tang_count() * g.half_count();
    f.plus_vals.assign(n, cd{});
    f.minus_vals.assign(n, cd{});
    return f;
}

namespace {

void transform_side(std::vector<cd>& v, const PeriodicGrid& g, int ncomp, bool fwd) {
    const int M = g.tang_modes;
    const int hc = g.half_count();
    auto run = [&](cd* base, int n, int count, int stride, int dist) {
        if (fwd)
            fft::forward_many(base, n, count, stride, dist);
        else
            fft::backward_many(base, n, count, stride, dist);
    };
    if (g.dim == 2) {
        for (int c = 0; c < ncomp; ++c)
            run(v.data() + static_cast<size_t>(c) * M * hc, M, hc, hc, 1);
        return;
    }
    const size_t comp_sz = static_cast<size_t>(M) * M * hc;
    for (int c = 0; c < ncomp; ++c) {
        cd* base = v.data() + c * comp_sz;
        // second tangential direction (contiguous blocks of hc)
        for (int k1 = 0; k1 < M; ++k1)
            run(base + static_cast<size_t>(k1) * M * hc, M, hc, hc, 1);
        // first tangential direction (stride M*hc)
        for (int k2 = 0; k2 < M; ++k2)
            run(base + static_cast<size_t>(k2) * hc, M, hc, M * hc, 1);
    }
}

} // namespace

void tangential_transform(TwoPhaseField& f, TangSpace target) {
    if (f.space == target) return;
    const bool fwd = target == TangSpace::spectral;
    transform_side(f.plus_vals, f.grid, f.ncomp, fwd);
    transform_side(f.minus_vals, f.grid, f.ncomp, fwd);
    f.space = target;
}

std::vector<cd> jump(const TwoPhaseField& f) {
    const int nt = f.grid.tang_count();
    std::vector<cd> j(static_cast<size_t>(f.ncomp) * nt);
    for (int c = 0; c < f.ncomp; ++c)
        for (int t = 0; t < nt; ++t)
            j[static_cast<size_t>(c) * nt + t] =
                f.at(Side::plus, c, t, 0) - f.at(Side::minus, c, t, 0);
    return j;
}

SpectralBoxField SpectralBoxField::zero(const PeriodicGrid& g, int ncomp) {
    SpectralBoxField f;
    f.grid = g;
    f.ncomp = ncomp;
    f.coef.assign(static_cast<size_t>(ncomp) * g.tang_count() * g.normal_cells, cd{});
    return f;
}

cd SpectralBoxField::eval_mode(int c, int t, double x) const {
    cd sum{};
    for (int kn = 0; kn < grid.normal_cells; ++kn)
        sum += at(c, t, kn) * std::exp(iu * (grid.xi_normal(kn) * x));
    return sum;
}

SpectralBoxField merge_to_box(const TwoPhaseField& f, double continuity_tol) {
    if (f.space != TangSpace::spectral)
        throw PreconditionError("merge_to_box expects a tangentially spectral field");
    const PeriodicGrid& g = f.grid;
    const int C = g.normal_cells;
    const int hc = g.half_count();
    const int nt = g.tang_count();

    double scale = 0.0;
    for (const cd& v : f.plus_vals) scale = std::max(scale, std::abs(v));
    for (const cd& v : f.minus_vals) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) return SpectralBoxField::zero(g, f.ncomp);

    double mismatch = 0.0;
    for (int c = 0; c < f.ncomp; ++c)
        for (int t = 0; t < nt; ++t) {
            mismatch = std::max(mismatch,
                                std::abs(f.at(Side::plus, c, t, 0) - f.at(Side::minus, c, t, 0)));
            mismatch = std::max(mismatch, std::abs(f.at(Side::plus, c, t, hc - 1) -
                                                   f.at(Side::minus, c, t, hc - 1)));
        }
    if (mismatch > continuity_tol * scale)
        throw PreconditionError("merge_to_box: field is discontinuous at the interface or "
                                "wrap-around plane (relative mismatch " +
                                std::to_string(mismatch / scale) + ")");

    SpectralBoxField out = SpectralBoxField::zero(g, f.ncomp);
    std::vector<cd> line(C);
    for (int c = 0; c < f.ncomp; ++c)
        for (int t = 0; t < nt; ++t) {
            // box sample j corresponds to x_N = -L + j h
            line[0] = 0.5 * (f.at(Side::minus, c, t, hc - 1) + f.at(Side::plus, c, t, hc - 1));
            for (int j = 1; j < C / 2; ++j) line[j] = f.at(Side::minus, c, t, C / 2 - j);
            line[C / 2] = 0.5 * (f.at(Side::minus, c, t, 0) + f.at(Side::plus, c, t, 0));
            for (int j = C / 2 + 1; j < C; ++j) line[j] = f.at(Side::plus, c, t, j - C / 2);
            fft::forward(line.data(), C);
            for (int kn = 0; kn < C; ++kn)
                out.at(c, t, kn) = line[kn] * ((kn & 1) ? -1.0 : 1.0);
        }
    return out;
}

void sample_side(const SpectralBoxField& g, Side s, int c, int t, cd* out) {
    const int C = g.grid.normal_cells;
    const int hc = g.grid.half_count();
    std::vector<cd> line(C);
    for (int kn = 0; kn < C; ++kn) line[kn] = g.at(c, t, kn) * ((kn & 1) ? -1.0 : 1.0);
    fft::backward(line.data(), C);
    for (int i = 0; i < hc; ++i) {
        const int j = s == Side::plus ? (C / 2 + i) % C : (C / 2 - i + C) % C;
        out[i] = line[j];
    }
}

FlowField FlowField::zero(const PeriodicGrid& g, int ncomp) {
    FlowField f;
    f.grid = g;
    f.ncomp = ncomp;
    f.prof = ProfileSet(ncomp, g.tang_count());
    return f;
}

cd FlowField::eval_mode(Side s, int c, int t, double xn) const {
    cd v{};
    if (const SpectralBoxField* gl = glob(s)) v += gl->eval_mode(c, t, xn);
    if (!prof.empty()) {
        const double z = std::abs(xn);
        for (const auto& term : prof.at(s, c, t)) v += eval(term, z);
    }
    return v;
}

cd FlowField::trace_mode(Side s, int c, int t) const {
    cd v{};
    if (const SpectralBoxField* gl = glob(s)) {
        for (int kn = 0; kn < grid.normal_cells; ++kn) v += gl->at(c, t, kn);
    }
    if (!prof.empty())
        for (const auto& term : prof.at(s, c, t)) v += trace(term);
    return v;
}

cd FlowField::jump_mode(int c, int t) const {
    return trace_mode(Side::plus, c, t) - trace_mode(Side::minus, c, t);
}

TwoPhaseField materialize(const FlowField& f) {
    const PeriodicGrid& g = f.grid;
    TwoPhaseField out = TwoPhaseField::zero(g, f.ncomp, TangSpace::spectral);
    const int hc = g.half_count();
    const int nt = g.tang_count();
    const double h = g.normal_spacing();
    std::vector<cd> buf(hc);
    for (Side s : both_sides) {
        for (int c = 0; c < f.ncomp; ++c)
            for (int t = 0; t < nt; ++t) {
                cd* dst = &out.at(s, c, t, 0);
                if (const SpectralBoxField* gl = f.glob(s)) {
                    sample_side(*gl, s, c, t, buf.data());
                    std::copy(buf.begin(), buf.end(), dst);
                }
                if (!f.prof.empty()) {
                    for (const auto& term : f.prof.at(s, c, t)) {
                        if (!term.diff) {
                            // recurrence along the ray avoids hc exp calls
                            const cd r = std::exp(-term.kappa1 * h);
                            cd v = term.coef;
                            dst[0] += v;
                            for (int i = 1; i < hc; ++i) {
                                v *= r;
                                dst[i] += v;
                            }
                        } else {
                            for (int i = 0; i < hc; ++i) dst[i] += eval(term, i * h);
                        }
                    }
                }
            }
    }
    return out;
}

namespace {
void require_compatible(const FlowField& a, const FlowField& b) {
    if (!(a.grid == b.grid) || a.ncomp != b.ncomp)
        throw PreconditionError("flow field operands have mismatched grid or components");
}

std::shared_ptr<const SpectralBoxField> add_globs(const std::shared_ptr<const SpectralBoxField>& a,
                                                  const std::shared_ptr<const SpectralBoxField>& b) {
    if (!a) return b;
    if (!b) return a;
    auto sum = std::make_shared<SpectralBoxField>(*a);
    for (size_t i = 0; i < sum->coef.size(); ++i) sum->coef[i] += b->coef[i];
    return sum;
}
} // namespace

FlowField add(const FlowField& a, const FlowField& b) {
    require_compatible(a, b);
    FlowField out = FlowField::zero(a.grid, a.ncomp);
    out.glob_plus = add_globs(a.glob_plus, b.glob_plus);
    out.glob_minus = add_globs(a.glob_minus, b.glob_minus);
    const int nt = a.grid.tang_count();
    for (Side s : both_sides)
        for (int c = 0; c < a.ncomp; ++c)
            for (int t = 0; t < nt; ++t) {
                auto& dst = out.prof.at(s, c, t);
                if (!a.prof.empty()) {
                    const auto& src = a.prof.at(s, c, t);
                    dst.insert(dst.end(), src.begin(), src.end());
                }
                if (!b.prof.empty()) {
                    const auto& src = b.prof.at(s, c, t);
                    dst.insert(dst.end(), src.begin(), src.end());
                }
            }
    return out;
}

FlowField scale(const FlowField& a, cd factor) {
    FlowField out = FlowField::zero(a.grid, a.ncomp);
    auto scale_glob = [&](const std::shared_ptr<const SpectralBoxField>& g)
        -> std::shared_ptr<const SpectralBoxField> {
        if (!g) return nullptr;
        auto r = std::make_shared<SpectralBoxField>(*g);
        for (auto& v : r->coef) v *= factor;
        return r;
    };
    out.glob_plus = scale_glob(a.glob_plus);
    out.glob_minus = scale_glob(a.glob_minus);
    const int nt = a.grid.tang_count();
    if (!a.prof.empty())
        for (Side s : both_sides)
            for (int c = 0; c < a.ncomp; ++c)
                for (int t = 0; t < nt; ++t) {
                    auto& dst = out.prof.at(s, c, t);
                    dst = a.prof.at(s, c, t);
                    for (auto& term : dst) term.coef *= factor;
                }
    return out;
}

namespace {

std::shared_ptr<const SpectralBoxField> tang_mult_glob(
    const std::shared_ptr<const SpectralBoxField>& g, int j) {
    if (!g) return nullptr;
    auto r = std::make_shared<SpectralBoxField>(*g);
    const PeriodicGrid& grid = r->grid;
    const int nt = grid.tang_count();
    const int C = grid.normal_cells;
    for (int t = 0; t < nt; ++t) {
        const cd w = iu * grid.xi_tang(t)[static_cast<size_t>(j)];
        for (int c = 0; c < r->ncomp; ++c)
            for (int kn = 0; kn < C; ++kn) r->at(c, t, kn) *= w;
    }
    return r;
}

std::shared_ptr<const SpectralBoxField> xn_mult_glob(
    const std::shared_ptr<const SpectralBoxField>& g) {
    if (!g) return nullptr;
    auto r = std::make_shared<SpectralBoxField>(*g);
    const PeriodicGrid& grid = r->grid;
    const int nt = grid.tang_count();
    const int C = grid.normal_cells;
    for (int kn = 0; kn < C; ++kn) {
        const cd w = iu * grid.xi_normal(kn);
        for (int c = 0; c < r->ncomp; ++c)
            for (int t = 0; t < nt; ++t) r->at(c, t, kn) *= w;
    }
    return r;
}

} // namespace

FlowField deriv_tang(const FlowField& f, int j) {
    if (j < 0 || j >= f.grid.dim - 1)
        throw PreconditionError("deriv_tang: direction out of range");
    FlowField out = FlowField::zero(f.grid, f.ncomp);
    out.glob_plus = tang_mult_glob(f.glob_plus, j);
    out.glob_minus = f.glob_minus == f.glob_plus ? out.glob_plus
                                                 : tang_mult_glob(f.glob_minus, j);
    const int nt = f.grid.tang_count();
    if (!f.prof.empty())
        for (Side s : both_sides)
            for (int c = 0; c < f.ncomp; ++c)
                for (int t = 0; t < nt; ++t) {
                    const cd w = iu * f.grid.xi_tang(t)[static_cast<size_t>(j)];
                    auto& dst = out.prof.at(s, c, t);
                    dst = f.prof.at(s, c, t);
                    for (auto& term : dst) term.coef *= w;
                }
    return out;
}

FlowField deriv_xn(const FlowField& f) {
    FlowField out = FlowField::zero(f.grid, f.ncomp);
    out.glob_plus = xn_mult_glob(f.glob_plus);
    out.glob_minus = f.glob_minus == f.glob_plus ? out.glob_plus : xn_mult_glob(f.glob_minus);
    const int nt = f.grid.tang_count();
    if (!f.prof.empty())
        for (Side s : both_sides) {
            const double sign = side_sign(s); // d/dx_N = sign * d/dz
            for (int c = 0; c < f.ncomp; ++c)
                for (int t = 0; t < nt; ++t) {
                    auto& dst = out.prof.at(s, c, t);
                    for (const auto& term : f.prof.at(s, c, t)) append_deriv(term, dst);
                    if (sign < 0)
                        for (auto& term : dst) term.coef = -term.coef;
                }
        }
    return out;
}

FlowField component(const FlowField& f, int c) {
    FlowField out = FlowField::zero(f.grid, 1);
    auto pick = [&](const std::shared_ptr<const SpectralBoxField>& g)
        -> std::shared_ptr<const SpectralBoxField> {
        if (!g) return nullptr;
        auto r = std::make_shared<SpectralBoxField>(SpectralBoxField::zero(f.grid, 1));
        const size_t n = static_cast<size_t>(f.grid.tang_count()) * f.grid.normal_cells;
        std::copy_n(g->coef.begin() + c * n, n, r->coef.begin());
        return r;
    };
    out.glob_plus = pick(f.glob_plus);
    out.glob_minus = f.glob_minus == f.glob_plus ? out.glob_plus : pick(f.glob_minus);
    if (!f.prof.empty())
        for (Side s : both_sides)
            for (int t = 0; t < f.grid.tang_count(); ++t)
                out.prof.at(s, 0, t) = f.prof.at(s, c, t);
    return out;
}

FlowField stack(const std::vector<FlowField>& comps) {
    if (comps.empty()) throw PreconditionError("stack: no components");
    const PeriodicGrid& g = comps[0].grid;
    FlowField out = FlowField::zero(g, static_cast<int>(comps.size()));
    const size_t n = static_cast<size_t>(g.tang_count()) * g.normal_cells;
    bool any_plus = false, any_minus = false;
    for (const auto& f : comps) {
        if (!(f.grid == g) || f.ncomp != 1)
            throw PreconditionError("stack: components must share the grid and be scalar");
        any_plus |= f.glob_plus != nullptr;
        any_minus |= f.glob_minus != nullptr;
    }
    auto gather = [&](Side s) -> std::shared_ptr<const SpectralBoxField> {
        auto r = std::make_shared<SpectralBoxField>(SpectralBoxField::zero(g, out.ncomp));
        for (size_t c = 0; c < comps.size(); ++c)
            if (const SpectralBoxField* src = comps[c].glob(s))
                std::copy_n(src->coef.begin(), n, r->coef.begin() + c * n);
        return r;
    };
    if (any_plus) out.glob_plus = gather(Side::plus);
    if (any_minus) out.glob_minus = gather(Side::minus);
    for (Side s : both_sides)
        for (size_t c = 0; c < comps.size(); ++c)
            if (!comps[c].prof.empty())
                for (int t = 0; t < g.tang_count(); ++t)
                    out.prof.at(s, static_cast<int>(c), t) = comps[c].prof.at(s, 0, t);
    return out;
}

} // namespace stokes2p
