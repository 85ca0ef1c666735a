#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "blowup/limitfield.hpp"
#include "blowup/specfun.hpp"

using namespace blowup;

TEST_CASE("homogeneous velocity") {
    const SpectralSolution s = solve_f(0.2);
    for (double sg : {0.3, 0.9, 1.4}) {
        const LimitVelocity u1 = u_lim_components(1.0, sg, s), u2 = u_lim_components(2.0, sg, s);
        CHECK(u2.u_rho / u1.u_rho == doctest::Approx(std::pow(2.0, 1.2)).epsilon(1e-13));
        CHECK(u2.u_sigma / u1.u_sigma == doctest::Approx(std::pow(2.0, 1.2)).epsilon(1e-13));
        const double f = eval_f(s, sg);
        CHECK(u1.u_sigma == doctest::Approx(-3.2 * f).epsilon(1e-14));
    }
    CHECK(std::fabs(u_lim_components(1.0, 0.5 * kPi, s).u_rho) < 1e-12);
}

TEST_CASE("strain entries") {
    const SpectralSolution s = solve_f(0.25);
    CHECK(kappa_of(0.0) == 3.0);
    const StrainHat d = strain_hat(kPi / 4, s);
    CHECK(d.d_rs == doctest::Approx(-kappa_of(0.25) * eval_f(s, kPi / 4) - 0.5).epsilon(1e-13));
    for (int i = 1; i <= 50; ++i) {
        const double sg = 0.5 * kPi * i / 51.0;
        const StrainHat e = strain_hat(sg, s);
        REQUIRE(std::fabs(e.d_rr + e.d_ss + e.d_tt) < 1e-10);
    }
    CHECK_THROWS_AS(strain_hat(0.0, s), std::domain_error);
}

TEST_CASE("two assemblies of the pressure source agree") {
    for (double a : {0.05, 0.12, 0.2, 0.28, 1.0 / 3.0}) {
        const SpectralSolution s = solve_f(a);
        for (int i = 1; i <= 50; ++i) {
            const double sg = 0.5 * kPi * i / 51.0;
            const double x1 = xi_s_lim(sg, s), x2 = xi_s_lim_reduced(sg, s);
            REQUIRE(std::isfinite(x1));
            REQUIRE(std::fabs(x1 - x2) <= 1e-9 * std::max(1.0, std::fabs(x2)));
        }
    }
}

TEST_CASE("growth near the equator") {
    const SpectralSolution s = solve_f(0.3);
    double worst = 0.0;
    for (double sg = 1.0; sg <= 1.57; sg += 0.01) worst = std::max(worst, std::fabs(xi_s_lim_reduced(sg, s)) / std::pow(std::tan(sg), 0.6));
    CHECK(worst < 50.0);
}

TEST_CASE("derivative consistency") {
    const SpectralSolution s = solve_f(0.22);
    for (double sg : {0.2, 0.5, 0.9, 1.2, 1.45}) {
        const double h = 1e-5;
        const double fd = (eval_f(s, sg + h) - eval_f(s, sg - h)) / (2 * h);
        CHECK(eval_f_prime(s, sg) == doctest::Approx(fd).epsilon(1e-6));
    }
}
