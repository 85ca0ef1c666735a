#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "blowup/coefficients.hpp"
#include "blowup/specfun.hpp"

using namespace blowup;

namespace {
double grid_alpha(int i) { return 0.01 + 0.01 * i; }  // 0.01 ... 0.33 for i = 0..32
}

TEST_CASE("C_W* closed form") {
    CHECK(std::fabs(cw_star(0.0) - 0.5) < 1e-12);
    CHECK(cw_star(1.0 / 3.0) == doctest::Approx(std::tgamma(5.0 / 3.0) * std::tgamma(5.0 / 6.0) / std::sqrt(kPi)).epsilon(1e-13));
    double prev = cw_star(0.0);
    for (int i = 1; i <= 20; ++i) {
        const double a = i / 60.0;
        const double c = cw_star(a);
        CHECK(std::fabs(cw_star_quadrature(a) - c) <= 1e-9 * c);
        CHECK(c > prev);
        prev = c;
    }
}

TEST_CASE("log-derivative of C_W* via digamma") {
    for (int i = 1; i <= 20; ++i) {
        const double a = i / 60.0, h = 1e-5;
        const double fd = (std::log(cw_star(a + h)) - std::log(cw_star(a - h))) / (2 * h);
        const double psi = 0.5 * digamma(0.5 * (a + 3)) - 0.5 * digamma(1 - 0.5 * a);
        CHECK(psi > 0.0);
        CHECK(std::fabs(fd - psi) < 1e-6);
    }
}

TEST_CASE("Gamma-ratio B1^2/C_W*^2 increases") {
    double prev = 0.0;
    for (int i = 0; i < 33; ++i) {
        const double a = grid_alpha(i), r = b1(a) * b1(a) / (cw_star(a) * cw_star(a));
        CHECK(r > prev);
        prev = r;
    }
}

TEST_CASE("finite-J depletion coefficient") {
    ModelParams p = ModelParams{}.with_alpha(0.25);
    const double c1 = cw_of_j(1.0, p), c2 = cw_of_j(0.1, p), c3 = cw_of_j(0.01, p), c4 = cw_of_j(1e-3, p);
    const double s = cw_star(0.25);
    CHECK(c1 > 0.0);
    CHECK(c4 > 0.0);
    CHECK(std::fabs(c4 - s) / s <= 0.01);
    CHECK(std::fabs(c3 - s) <= std::fabs(c2 - s));
    CHECK(std::fabs(c2 - s) <= std::fabs(c1 - s));
    CHECK(i_sigma(1e-3, p) == doctest::Approx(std::pow(1e-3, 0.75) * 2 * c4).epsilon(1e-12));
    for (double a : {0.1, 0.2, 0.3}) {
        const ModelParams q = ModelParams{}.with_alpha(a);
        CHECK(std::fabs(depletion_ratio(1e-3, q) / (2 * cw_star(a)) - 1) < 0.01);
    }
}

TEST_CASE("radial constants") {
    CHECK(crho(1, 0.2, 3.0) == doctest::Approx(0.5 * beta_fn(0.1, 1.4)).epsilon(1e-14));
    CHECK(crho(1, 0.2, 3.0) == doctest::Approx(4.762).epsilon(1e-3));
    CHECK(crho(2, 0.2, 3.0) == doctest::Approx(1.924).epsilon(1e-3));
    const double r = 2 * crho(2, 0.2, 3.0) / std::pow(crho(1, 0.2, 3.0), 2);
    CHECK(r == doctest::Approx(0.170).epsilon(5e-3));
    CHECK(r <= 0.2);
    CHECK(1e-4 * crho(1, 1e-4, 3.0) == doctest::Approx(1.0).epsilon(1e-3));
    CHECK_THROWS_AS(crho(1, 0.3, 0.3), std::domain_error);
    CHECK_THROWS_AS(crho(3, 0.2, 1.0), std::invalid_argument);
    for (int i = 0; i < 29; ++i) {
        const double a = 0.05 + 0.01 * i;
        for (double g : {a + 0.1, 1.0, 3.0, 6.0}) {
            const double c1 = crho(1, a, g), c2 = crho(2, a, g);
            CHECK(std::fabs(crho_quadrature(1, a, g) - c1) <= 1e-8 * c1);
            CHECK(std::fabs(crho_quadrature(2, a, g) - c2) <= 1e-8 * c2);
            CHECK(2 * c2 / (c1 * c1) <= a);
        }
    }
}

TEST_CASE("two-mode pressure coefficient") {
    CHECK(cs_two_mode(0.0) == doctest::Approx(35.0 / 4096.0 * std::pow(kPi / 2, 2)).epsilon(1e-13));
    const double third = 1.0 / 3.0;
    CHECK(cs_two_mode(third) == doctest::Approx(-2255905.0 / 17570592.0 * std::pow(b1(third), 2)).epsilon(1e-12));
    double prev = g_two_mode(0.0);
    for (int i = 1; i <= 60; ++i) {
        const double g = g_two_mode(third * i / 60);
        CHECK(g < prev);
        prev = g;
    }
    CHECK(g_two_mode(0.0) > 0.0);
    CHECK(g_two_mode(third) < 0.0);
}

TEST_CASE("pressure coefficient near zero and the envelope where it holds") {
    const double b = b1(0.005);
    CHECK(std::fabs(cs_star(0.005)) <= 0.02 * b * b);
    // The published tail constant 3/10 covers the grid up to alpha = 0.30.
    for (int i = 0; i < 30; ++i) {
        const double a = grid_alpha(i);
        const CoefficientSet c = compute_coefficients(a, a + 2.6);
        CHECK_MESSAGE(std::fabs(c.cs_star - c.cs_two_mode) <= c.tail_slack, "alpha = " << a);
        CHECK(c.envelope_ok);
    }
}

TEST_CASE("tail constant near the 1/3 endpoint") {
    // Above alpha ~ 0.31 the computed remainder exceeds 3/10 B1^2/(mu5 - lambda);
    // the acceptance run reports this as a failed criterion. Here the effective
    // constant is pinned so a change in the spectral solver is noticed.
    const double a = 1.0 / 3.0;
    const CoefficientSet c = compute_coefficients(a, a + 2.6);
    const double b = b1(a);
    const double delta_eff = std::fabs(c.cs_star - c.cs_two_mode) * (eigenvalue_mu(5) - lambda_of(a)) / (b * b);
    CHECK(delta_eff == doctest::Approx(0.446).epsilon(0.01));
    CHECK_FALSE(c.envelope_ok);
    CHECK(c.cs_star == doctest::Approx(-0.63357112).epsilon(1e-6));
}

TEST_CASE("Phi and the Riccati ratio") {
    CHECK(phi_alpha(0.01) <= 0.05);
    CHECK(phi_alpha(1.0 / 3.0) <= 0.84);
    for (int i = 0; i < 33; ++i) {
        const double a = grid_alpha(i);
        const CoefficientSet c = compute_coefficients(a, a + 2.6, 16);
        CHECK(c.phi <= 6.0 / 7.0);
        CHECK(c.phi == doctest::Approx(a * std::fabs(c.cs_star) / (c.cw_star * c.cw_star)));
        for (double g : {a + 0.1, 1.0, 3.0, 6.0}) {
            CoefficientSet d = c;
            d.gamma = g;
            d.crho1 = crho(1, a, g);
            d.crho2 = crho(2, a, g);
            const double r = riccati_ratio(a, g, d);
            CHECK(std::fabs(r) <= c.phi * (1 + 1e-12));
            CHECK(std::fabs(r) <= 6.0 / 7.0);
            CHECK((r < 0) == (c.cs_star < 0));
        }
    }
}

TEST_CASE("model asymptotics") {
    ModelParams p = ModelParams{}.with_alpha(0.2);
    p.Gamma_amp = 1.7;
    const CoefficientSet c = compute_coefficients(0.2, p.gamma, 16);
    for (double J : {0.5, 0.1, 1e-3}) {
        const ModelAsymptotics m = model_asymptotics(J, c, p);
        CHECK(m.w_model < 0.0);
        CHECK(m.pi_model / (0.5 * m.w_model * m.w_model) == doctest::Approx(c.r_star).epsilon(1e-12));
        CHECK(std::fabs(m.pi_model) <= 0.875 * 0.5 * m.w_model * m.w_model);
    }
    CHECK_THROWS_AS(model_asymptotics(0.0, c, p), std::domain_error);
}

TEST_CASE("csv row format") {
    CHECK(coefficient_csv_header() == "alpha,gamma,cw_star,cs_star,cs_two_mode,tail_slack,crho1,crho2,r_star,phi");
    const std::string row = coefficient_csv_row(compute_coefficients(0.25, 3.0, 8));
    CHECK(row.rfind("0.25,3,", 0) == 0);
    CHECK(std::count(row.begin(), row.end(), ',') == 9);
}
