#include <cmath>

#include "doctest.h"

#include "stokes2p/multiplier_check.hpp"
#include "stokes2p/params.hpp"
#include "stokes2p/quadrature.hpp"
#include "stokes2p/rng.hpp"
#include "stokes2p/symbols.hpp"

using namespace stokes2p;

namespace {

double rel_err(cd got, cd want) {
    return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

FluidParams random_fluids(Rng& rng) {
    FluidParams fp;
    fp.rho_plus = rng.uniform(0.3, 3.0);
    fp.rho_minus = rng.uniform(0.3, 3.0);
    fp.mu_plus = rng.uniform(0.3, 3.0);
    fp.mu_minus = rng.uniform(0.3, 3.0);
    return fp;
}

cd random_sector_lambda(Rng& rng, double eps) {
    const double r = std::pow(10.0, rng.uniform(-1.0, 3.0));
    const double arg = rng.uniform(-(pi - eps), pi - eps);
    return std::polar(r, arg);
}

CheckerConfig trimmed_checker() {
    CheckerConfig cfg;
    cfg.lambda_per_decade = 2;
    cfg.A_per_decade = 1;
    cfg.directions = 1;
    return cfg;
}

} // namespace

TEST_CASE("eval_B principal branch") {
    CHECK(rel_err(eval_B(1, 1, iu, 0), std::polar(1.0, pi / 4)) < 1e-15);
    CHECK(rel_err(eval_B(1, 1, 4.0, 3.0), std::sqrt(13.0)) < 1e-15);
    const cd la{1.0, 2.0};
    const cd b = eval_B(2.0, 0.5, la, 1.5);
    CHECK(rel_err(b * b, 4.0 * la + 2.25) < 1e-14);

    for (double r : {1e-2, 1.0, 1e2, 1e4})
        for (double sign : {1.0, -1.0}) {
            const cd lam = std::polar(r, sign * (pi - pi / 4));
            CHECK(eval_B(1.7, 0.4, lam, 0.2).real() > 0);
        }
    CHECK_THROWS_AS(eval_B(1, 1, cd{0, 0}, 1.0), std::domain_error);
}

TEST_CASE("boundary symbol matrix and determinant") {
    Rng rng(7);
    for (int k = 0; k < 50; ++k) {
        const FluidParams fp = random_fluids(rng);
        const cd la = random_sector_lambda(rng, pi / 4);
        const double A = std::pow(10.0, rng.uniform(-3.0, 3.0));
        const auto d = make_lopatinskii(fp, la, A);

        CHECK(rel_err(d.detL, d.M11 * d.M22 - d.M12 * d.M21) < 1e-12);
        CHECK(rel_err(d.M11 * d.L11 + d.M12 * d.L21, d.detL) < 1e-12);
        CHECK(std::abs(d.M11 * d.L12 + d.M12 * d.L22) < 1e-12 * std::abs(d.detL));
        CHECK(std::abs(d.M21 * d.L11 + d.M22 * d.L21) < 1e-12 * std::abs(d.detL));
        CHECK(rel_err(d.M21 * d.L12 + d.M22 * d.L22, d.detL) < 1e-12);
    }

    SUBCASE("equal phases") {
        FluidParams fp{1.3, 1.3, 0.8, 0.8};
        const cd la = std::polar(25.0, 2.0);
        const double A = 0.7;
        const auto d = make_lopatinskii(fp, la, A);
        const cd B = d.B_plus;
        CHECK(rel_err(d.detL, 4.0 * 0.8 * 0.8 * B * (A + B) * (A + B)) < 1e-13);
    }

    SUBCASE("A = 0") {
        FluidParams fp{2.0, 0.5, 1.5, 0.6};
        const cd la = std::polar(3.0, -1.2);
        const auto d = make_lopatinskii(fp, la, 0.0);
        const cd mb = 1.5 * d.B_plus + 0.6 * d.B_minus;
        const cd want = mb * (1.5 * d.B_plus * d.B_plus + 0.6 * d.B_minus * d.B_minus);
        CHECK(rel_err(d.detL, want) < 1e-13);
    }
}

TEST_CASE("interface kernel M") {
    CHECK(std::abs(eval_M(0.9, cd{1.4, 0.3}, 0.0)) == 0.0);

    SUBCASE("confluent limit") {
        const double A = 1.3, a = 0.8;
        const cd exact = -a * std::exp(-A * a);
        CHECK(rel_err(eval_M(A, cd(A), a), exact) < 1e-14);
        CHECK(rel_err(eval_M(A, cd(A * (1 + 1e-9)), a), exact) < 1e-8);
    }

    SUBCASE("definition vs plain exponentials") {
        const double A = 0.6, a = 1.7;
        const cd B{1.9, 0.8};
        const cd want = (std::exp(-B * a) - std::exp(-A * a)) / (B - A);
        CHECK(rel_err(eval_M(A, B, a), want) < 1e-14);
    }

    SUBCASE("half-line convolution identity") {
        // int_0^inf (e^{-|x-y|A} - e^{-(x+y)A}) e^{-By} dy = -(2A/(B+A)) M(x)
        Rng rng(11);
        for (int k = 0; k < 5; ++k) {
            const double A = rng.uniform(0.3, 2.5);
            const cd B = eval_B(rng.uniform(0.5, 2.0), rng.uniform(0.5, 2.0),
                                random_sector_lambda(rng, pi / 4), A);
            const double x = rng.uniform(0.2, 3.0);
            auto f = [&](double y) {
                return (std::exp(-std::abs(x - y) * A) - std::exp(-(x + y) * A))
                       * std::exp(-B * y);
            };
            const cd near = adaptive_gk15(f, 0.0, x, 1e-12).value;
            const cd far =
                integrate_to_infinity(f, x, A + B.real(), 1e-12, std::abs(B.imag())).value;
            const cd want = -(2.0 * A / (B + A)) * eval_M(A, B, x);
            CHECK(std::abs(near + far - want) < 1e-8);
        }
    }
}

TEST_CASE("multiplier class checker verdicts") {
    const FluidParams fp{1.0, 1.7, 1.2, 0.4};
    const auto cfg = trimmed_checker();
    const auto stock = stock_symbols(fp);
    auto find = [&](const std::string& name) -> const Symbol& {
        for (const auto& s : stock)
            if (s.name == name) return s;
        throw std::runtime_error("missing symbol " + name);
    };

    for (const char* name : {"lambda_half", "B_plus", "inv_muB_sum"}) {
        const auto v = check_symbol(find(name), cfg);
        CHECK(v.verdict_type == 1);
        CHECK(v.matches_declaration);
    }
    for (const char* name : {"A", "i_xi_1_over_A", "detL", "inv_detL", "coef_hN_tang_M"}) {
        const auto v = check_symbol(find(name), cfg);
        CHECK(v.verdict_type == 2);
        CHECK(v.matches_declaration);
    }

    SUBCASE("misdeclared order fails") {
        Symbol bad;
        bad.name = "lambda_half_as_order_0";
        bad.declared_type = 1;
        bad.declared_order = 0;
        bad.eval = [](const std::array<double, 2>&, cd la) { return std::sqrt(la); };
        const auto v = check_symbol(bad, cfg);
        CHECK(v.verdict_type == 0);
        CHECK_FALSE(v.matches_declaration);
    }

    SUBCASE("noise floor engages for flat symbols") {
        Symbol flat;
        flat.name = "constant";
        flat.declared_type = 1;
        flat.declared_order = 0;
        flat.eval = [](const std::array<double, 2>&, cd) { return cd{1.0, 0.0}; };
        const auto v = check_symbol(flat, cfg);
        CHECK(v.verdict_type == 1);
        CHECK(v.skipped > 0);
    }
}

TEST_CASE("composition closure") {
    const FluidParams fp{1.0, 1.7, 1.2, 0.4};
    const auto cfg = trimmed_checker();
    const auto stock = stock_symbols(fp);
    Rng rng(3);
    for (int k = 0; k < 5; ++k) {
        const auto& a = stock[static_cast<size_t>(rng.uniform_int(0, stock.size() - 1))];
        const auto& b = stock[static_cast<size_t>(rng.uniform_int(0, stock.size() - 1))];
        const auto p = symbol_product(a, b);
        const auto v = check_symbol(p, cfg);
        INFO(p.name);
        // Type 1 products may land in the sharper class; declared type 2 must
        // at least verify as some class at the summed order.
        if (p.declared_type == 1) {
            CHECK(v.verdict_type == 1);
        } else {
            CHECK(v.verdict_type != 0);
        }
    }
}

TEST_CASE("determinant lower bound fit") {
    const auto cfg = trimmed_checker();
    for (FluidParams fp : {FluidParams{1.0, 2.0, 1.0, 0.5}, FluidParams{1.0, 1.0, 1.0, 1.0},
                           FluidParams{0.9, 1.1, 2.4, 0.3}}) {
        const auto fit = fit_detL_lower_bound(fp, cfg);
        CHECK(fit.c > 0);
        CHECK(fit.drift < 0.10);
    }
}
