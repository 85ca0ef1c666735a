#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "blowup/quad.hpp"
#include "blowup/spectral.hpp"
#include "blowup/specfun.hpp"

using namespace blowup;

namespace {
double quad_norm(int n) {
    return integrate([n](double x) { double v = phi_n(n, x); return v * v; }, 0.0, 1.0, 1e-14).value;
}
}  // namespace

TEST_CASE("eigenvalues") {
    CHECK(eigenvalue_mu(1) == 2.0);
    CHECK(eigenvalue_mu(3) == 12.0);
    CHECK(eigenvalue_mu(5) == 30.0);
    CHECK(eigenvalue_mu(5) - lambda_of(1.0 / 3.0) == doctest::Approx(200.0 / 9.0).epsilon(1e-14));
    CHECK(lambda_of(0.0) == 6.0);
    for (int i = 1; i < 33; ++i) {
        const double l = lambda_of(i / 99.0);
        CHECK(l > 2.0);
        CHECK(l < 12.0);
    }
    CHECK_THROWS_AS(eigenvalue_mu(2), std::invalid_argument);
    CHECK_THROWS_AS(eigenvalue_mu(-1), std::invalid_argument);
}

TEST_CASE("explicit low modes") {
    for (int i = 0; i <= 20; ++i) {
        const double x = i / 20.0, s = std::sqrt(1 - x * x);
        CHECK(phi_n(1, x) == doctest::Approx(s).epsilon(1e-14));
        CHECK(phi_n(3, x) == doctest::Approx((5 * x * x - 1) * s).epsilon(1e-13));
        CHECK(phi_n(5, x) == doctest::Approx((21 * std::pow(x, 4) - 14 * x * x + 1) * s).epsilon(1e-13));
    }
    CHECK(phi_n(1, 0.0) == 1.0);
    CHECK(phi_n(3, 0.0) == doctest::Approx(-1.0));
    CHECK(phi_n(5, 1.0) == 0.0);
    CHECK_THROWS_AS(phi_n(4, 0.3), std::invalid_argument);
}

TEST_CASE("eigen-identity of the recurrence basis") {
    // Check L phi = mu phi pointwise by finite differences in sigma.
    for (int n : {1, 3, 7, 11, 21}) {
        for (double s : {0.3, 0.8, 1.2}) {
            const double h = 1e-4;
            auto ph = [n](double sg) { return phi_n(n, std::cos(sg)); };
            const double f = ph(s), fp = (ph(s + h) - ph(s - h)) / (2 * h), fpp = (ph(s + h) - 2 * f + ph(s - h)) / (h * h);
            const double Lf = -fpp - fp * std::cos(s) / std::sin(s) + f / (std::sin(s) * std::sin(s));
            CHECK(Lf == doctest::Approx(eigenvalue_mu(n) * f).epsilon(1e-5 * n * n).scale(1.0));
        }
        // Neumann condition at the equator.
        const double d = (phi_n(n, 1e-5) - phi_n(n, -1e-5)) / 2e-5;
        // d/dsigma = -sin(sigma) d/dx at x = 0 is -d/dx; it must vanish because R_n is odd-free.
        CHECK(std::fabs(d) < 1e-6 * n * n);
    }
}

TEST_CASE("norms") {
    CHECK(std::fabs(quad_norm(1) - 2.0 / 3.0) < 1e-10);
    CHECK(std::fabs(quad_norm(3) - 16.0 / 21.0) < 1e-10);
    CHECK(norm_sq_phi(1) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(norm_sq_phi(3) == doctest::Approx(16.0 / 21.0).epsilon(1e-15));
    for (int n = 5; n <= 31; n += 2) CHECK(norm_sq_phi(n) == doctest::Approx(quad_norm(n)).epsilon(1e-11));
}

TEST_CASE("orthogonality") {
    for (int m = 1; m <= 9; m += 2)
        for (int n = m + 2; n <= 9; n += 2) {
            const double v = integrate([m, n](double x) { return phi_n(m, x) * phi_n(n, x); }, 0.0, 1.0, 1e-14).value;
            CHECK(std::fabs(v) <= 1e-10);
        }
}

TEST_CASE("source projections") {
    for (int i = 0; i < 10; ++i) {
        const double a = 0.01 + 0.32 * i / 9.0;
        const double b = b1(a);
        CHECK(inner_h_phi(1, a) == doctest::Approx(b / 2).epsilon(1e-9));
        CHECK(inner_h_phi(3, a) == doctest::Approx((1 - 5 * a) * b / 8).epsilon(1e-9));
    }
    CHECK(std::fabs(inner_h_phi(3, 0.2)) < 1e-12);
    CHECK(inner_h_phi(1, 0.0) == doctest::Approx(kPi / 4).epsilon(1e-12));
}

TEST_CASE("solve_f coefficients") {
    for (double a : {0.01, 0.1, 0.2, 0.3, 1.0 / 3.0}) {
        const SpectralSolution s = solve_f(a, 8);
        const double b = b1(a);
        const double h1 = -3.0 / (4 * (a + 1) * (a + 4));
        const double h3 = 21 * (1 - 5 * a) / (128 * (1 - a) * (a + 6));
        CHECK(s.coeff(1) < 0.0);
        CHECK(s.coeff(1) == doctest::Approx(h1 * b).epsilon(1e-9));
        CHECK(s.coeff(3) == doctest::Approx(h3 * b).epsilon(1e-9));
        CHECK(s.lambda_val > 2.0);
        CHECK(s.lambda_val < 12.0);
        CHECK(s.tail_norm_sq >= -1e-10);
        // h_norm_sq closed form: (1/2) B(1/2 - a, 1 + a).
        CHECK(s.h_norm_sq == doctest::Approx(0.5 * beta_fn(0.5 - a, 1 + a)).epsilon(1e-11));
    }
    CHECK(solve_f(0.19, 4).coeff(3) > 0.0);
    CHECK(solve_f(0.21, 4).coeff(3) < 0.0);
    // Small-alpha limit of the normalised first coefficient.
    CHECK(solve_f(1e-6, 2).coeff(1) / b1(1e-6) == doctest::Approx(-3.0 / 16.0).epsilon(1e-5));
    const SpectralSolution t = solve_f(1.0 / 3.0, 2);
    CHECK(t.coeff(1) / b1(1.0 / 3.0) == doctest::Approx(-27.0 / 208.0).epsilon(1e-10));
    CHECK(t.coeff(3) / b1(1.0 / 3.0) == doctest::Approx(-63.0 / 2432.0).epsilon(1e-10));
    CHECK_THROWS_AS(solve_f(0.5, 8), std::domain_error);
    CHECK_THROWS_AS(solve_f(0.2, 1), std::invalid_argument);
}

TEST_CASE("two-mode reconstruction") {
    const SpectralSolution s = solve_f(0.25, 2);
    const double a1 = s.coeff(1), a3 = s.coeff(3);
    for (int i = 1; i < 20; ++i) {
        const double sg = 0.5 * kPi * i / 20.0, x = std::cos(sg);
        CHECK(eval_f(s, sg) == doctest::Approx((a1 + a3 * (5 * x * x - 1)) * std::sqrt(1 - x * x)).epsilon(1e-13));
        CHECK(eval_f_prime(s, sg) == doctest::Approx(x * (a1 + a3 * (15 * x * x - 11))).epsilon(1e-12).scale(1e-3));
    }
}

TEST_CASE("boundary behaviour and interior residual") {
    const SpectralSolution s = solve_f(0.2, 8);
    CHECK(std::fabs(eval_f(s, 1e-7)) < 1e-6);
    CHECK(std::fabs(eval_f_prime(s, 0.5 * kPi)) < 1e-14);
    // (L - lambda) applied to the truncated f reproduces the projection of the source
    // onto the retained modes; the operator is applied by finite differences.
    for (double sg : {0.4, 0.9, 1.2}) {
        const double h = 1e-4;
        const double f = eval_f(s, sg), fp = eval_f_prime(s, sg);
        const double fpp = (eval_f_prime(s, sg + h) - eval_f_prime(s, sg - h)) / (2 * h);
        const double lhs = -fpp - fp / std::tan(sg) + f / (std::sin(sg) * std::sin(sg)) - s.lambda_val * f;
        double proj = 0.0;
        for (int n = 1; n <= 15; n += 2) proj += inner_h_phi(n, 0.2) / norm_sq_phi(n) * phi_n(n, std::cos(sg));
        CHECK(lhs == doctest::Approx(proj).epsilon(1e-6));
    }
}

TEST_CASE("Galerkin residual equals the Parseval tail and shrinks") {
    double prev = 1e300;
    for (int n : {2, 4, 8, 16, 32}) {
        const SpectralSolution s = solve_f(0.3, n);
        CHECK(s.tail_norm_sq >= -1e-10);
        CHECK(s.tail_norm_sq < prev);
        prev = s.tail_norm_sq;
        const TailBounds b = tail_energy(s);
        CHECK(b.energy_bound / b.l2_bound == doctest::Approx(std::sqrt(eigenvalue_mu(2 * n + 1))));
    }
    const SpectralSolution s2 = solve_f(1.0 / 3.0, 2);
    CHECK(tail_energy(s2).gap == doctest::Approx(200.0 / 9.0));
    const SpectralSolution s32 = solve_f(1.0 / 3.0, 32);
    CHECK(tail_energy(s32, 2).gap == doctest::Approx(200.0 / 9.0));
    CHECK(tail_energy(s32).l2_bound <= tail_energy(s32, 2).l2_bound);
    CHECK(tail_energy(s32).energy_bound <= tail_energy(s32, 8).energy_bound);
}

TEST_CASE("convention independence") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(0.2, 5.0);
    std::vector<double> scales(16);
    for (auto& c : scales) c = (rng() % 2 ? 1.0 : -1.0) * u(rng);
    const SpectralSolution a = solve_f(0.27, 16);
    const SpectralSolution b = solve_f(0.27, 16, 1e-13, scales);
    for (int i = 1; i <= 20; ++i) {
        const double sg = 0.5 * kPi * i / 21.0;
        CHECK(std::fabs(eval_f(a, sg) - eval_f(b, sg)) < 1e-9);
        CHECK(std::fabs(eval_f_prime(a, sg) - eval_f_prime(b, sg)) < 1e-9);
    }
    CHECK(a.tail_norm_sq == doctest::Approx(b.tail_norm_sq).epsilon(1e-9));
}

TEST_CASE("json export") {
    const std::string j = solve_f(0.2, 2).to_json();
    CHECK(j.find("\"alpha\": 0.2") != std::string::npos);
    CHECK(j.find("\"modes\": [{\"n\": 1") != std::string::npos);
    CHECK(j.find("tail_norm_sq") != std::string::npos);
}
