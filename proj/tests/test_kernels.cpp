#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "blowup/kernels.hpp"
#include "blowup/quad.hpp"
#include "blowup/specfun.hpp"

using namespace blowup;

TEST_CASE("strain kernel") {
    CHECK(std::fabs(kernel_kw(0.0)) < 1e-16);
    CHECK(std::fabs(kernel_kw(kPi / 2)) < 1e-15);
    CHECK(kernel_kw(kPi / 4) == doctest::Approx(3.0 * std::sqrt(2.0) / 4.0).epsilon(1e-14));
    // Maximiser by golden search, independent of the closed-form nodal angle.
    double a = 0.1, b = 1.5;
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    for (int i = 0; i < 200; ++i) {
        const double c = b - g * (b - a), d = a + g * (b - a);
        if (kernel_kw(c) > kernel_kw(d))
            b = d;
        else
            a = c;
    }
    CHECK(0.5 * (a + b) == doctest::Approx(nodal_angle()).epsilon(1e-7));
}

TEST_CASE("pressure kernel factor and the nodal cone") {
    CHECK(nodal_angle() == doctest::Approx(0.955316618).epsilon(1e-9));
    CHECK(nodal_angle() * 180.0 / kPi == doctest::Approx(54.7).epsilon(1e-3));
    CHECK(std::fabs(kernel_kzz_angular(nodal_angle())) < 1e-14);
    CHECK(kernel_kzz_angular(0.0) == 2.0);
    CHECK(kernel_kzz_angular(kPi / 2) == doctest::Approx(-1.0));
    const double s = nodal_angle();
    CHECK(std::fabs(std::sin(s) * (3 * std::cos(s) * std::cos(s) - 1)) < 1e-14);
    for (int i = 0; i <= 200; ++i) {
        const double x = 0.5 * kPi * i / 200.0;
        if (x < s - 1e-12) REQUIRE(kernel_kzz_angular(x) > 0.0);
        if (x > s + 1e-12) REQUIRE(kernel_kzz_angular(x) < 0.0);
    }
}

TEST_CASE("zero spherical mean") {
    const double v = integrate([](double x) { return kernel_kzz_angular(x) * std::sin(x); }, 0.0, kPi, 1e-14).value;
    CHECK(std::fabs(v) < 1e-12);
}
