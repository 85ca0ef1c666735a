#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <fstream>
#include <random>

#include "blowup/coefficients.hpp"
#include "blowup/exact.hpp"

using namespace blowup;

TEST_CASE("rational parsing") {
    CHECK(parse_rational("1/3") == rat(1, 3));
    CHECK(parse_rational("-6/4") == rat(-3, 2));
    CHECK(parse_rational("0.25") == rat(1, 4));
    CHECK(parse_rational("-1.5e-3") == rat(-3, 2000));
    CHECK(parse_rational("17.77") == rat(1777, 100));
    CHECK(parse_rational("2E2") == rat(200));
    CHECK(rat(2048, -15) == rat(-2048, 15));
    CHECK(to_string(rat(6, 8)) == "3/4");
    CHECK(to_double(rat(1, 3)) == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
    for (const char* bad : {"", "1/0", "abc", "1.2.3", "3e", "1/2x"}) CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic") {
    const RationalPolynomial p({rat(1), rat(2), rat(3)});
    const RationalPolynomial q = RationalPolynomial::linear(rat(-1), rat(1));
    CHECK((p * q).divide_exact(q) == p);
    CHECK(p.derivative() == RationalPolynomial({rat(2), rat(6)}));
    CHECK(q.pow(3)(rat(3)) == rat(8));
    CHECK((p - p).is_zero());
    CHECK_THROWS_AS(p.divide_exact(q), std::domain_error);
    CHECK(p(rat(1, 2)) == rat(1) + rat(1) + rat(3, 4));
}

TEST_CASE("endpoint values of G") {
    CHECK(g_exact(rat(0)) == rat(35, 4096));
    CHECK(g_exact(rat(1, 3)) == rat(-2255905, 17570592));
    CHECK(g_from_integrals(rat(0)) == rat(35, 4096));
    CHECK(g_from_integrals(rat(1, 3)) == rat(-2255905, 17570592));
}

TEST_CASE("hat coefficients") {
    CHECK(hat_a1(rat(0)) == rat(-3, 16));
    CHECK(hat_a1(rat(1, 3)) == rat(-27, 208));
    CHECK(hat_a3(rat(1, 3)) == rat(-63, 2432));
    CHECK(hat_a3(rat(1, 5)) == 0);
    CHECK_THROWS_AS(hat_a1(rat(-1)), PoleError);
    CHECK_THROWS_AS(hat_a3(rat(1)), PoleError);
    CHECK_THROWS_AS(g_exact(rat(-4)), PoleError);
    CHECK_THROWS_AS(d_log_derivative(rat(1)), PoleError);
}

TEST_CASE("three representations of G agree at random rationals") {
    std::mt19937_64 rng(20240611);
    for (int i = 0; i < 12; ++i) {
        const long long den = 1 + static_cast<long long>(rng() % 997);
        const long long num = static_cast<long long>(rng() % static_cast<unsigned long long>(den + 1));
        const ExactRational a = rat(num, 3 * den);  // in [0, 1/3]
        const ExactRational g = g_exact(a);
        CHECK(g == g_common_denominator(a));
        CHECK(g == g_from_integrals(a));
        CHECK(std::fabs(g_two_mode(to_double(a)) - to_double(g)) <= 1e-12);
    }
}

TEST_CASE("N polynomial") {
    const RationalPolynomial listed = n_polynomial_listed();
    CHECK(listed == n_polynomial_derived());
    CHECK(listed.degree() == 9);
    CHECK(listed(rat(0)) == -672);
    const std::vector<ExactRational> np = n_prime_coefficients();
    CHECK(RationalPolynomial(np) == listed.derivative());
    ExactRational smallest = np.front();
    for (const auto& c : np) {
        CHECK(c > 0);
        smallest = c < smallest ? c : smallest;
    }
    CHECK(smallest == 315);
    ExactRational lower = np.front();
    for (std::size_t i = 0; i + 1 < np.size(); ++i) lower = np.at(i) < lower ? np.at(i) : lower;
    CHECK(lower == 3228);
}

TEST_CASE("moments") {
    CHECK(j_moment(0) == 0);
    CHECK(j_moment(1) == rat(1, 3) - rat(3, 5));
    // I_0 / B1 = 1/2 and I_{k+1} = I_k (2k+1-a) / (2k+4) from the Beta recurrence.
    const ExactRational a = rat(2, 7);
    CHECK(i_moment_over_b1(0, a) == rat(1, 2));
    for (int k = 0; k < 6; ++k)
        CHECK(i_moment_over_b1(k + 1, a) == i_moment_over_b1(k, a) * (2 * k + 1 - a) / (2 * k + 4));
    CHECK(d_log_derivative(rat(0)) == rat(-7, 6));
    CHECK(d_log_derivative(rat(1, 3)) == rat(-549, 247));
}

TEST_CASE("certificate") {
    const CertificateReport r = certify_phi_bound();
    CHECK(r.overall());
    for (const auto& c : r.clauses) CHECK_MESSAGE(c.pass, c.id << ": " << c.statement);
    const std::string js = r.to_json();
    CHECK(js.find("\"overall\": \"pass\"") != std::string::npos);
    for (const char* id : {"G0", "G13", "Nprime_positive", "G_bound", "tail_bound", "Robbins_gamma_third",
                           "Robbins_gamma_five_sixths", "final_envelope", "phi_third_chain"})
        CHECK(js.find(std::string("\"") + id + "\"") != std::string::npos);
}

TEST_CASE("tampered certificate inputs fail") {
    {
        CertificateInputs in = CertificateInputs::defaults();
        in.n_coefficients[3] += 1;
        CHECK_FALSE(certify_phi_bound(in).overall());
    }
    {
        CertificateInputs in = CertificateInputs::defaults();
        in.gamma_third_upper = parse_rational("2.6");
        CHECK_FALSE(certify_phi_bound(in).overall());
    }
    {
        CertificateInputs in = CertificateInputs::defaults();
        in.f1_bound = parse_rational("5.96");
        CHECK_FALSE(certify_phi_bound(in).overall());
    }
    {
        const std::string path = "tampered_inputs_test.json";
        std::ofstream(path) << "{\"g_at_zero\": \"35/4095\"}";
        CHECK_FALSE(certify_phi_bound(load_certificate_inputs(path)).overall());
        std::ofstream(path) << "{\"g_at_zero\": 0.5}";
        CHECK_THROWS_AS(load_certificate_inputs(path), std::invalid_argument);
    }
    CHECK_THROWS_AS(load_certificate_inputs("does/not/exist.json"), std::invalid_argument);
}
