#include "blowup/specfun.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace blowup {
namespace {

constexpr double kEulerGamma = 0.57721566490153286061;
constexpr double kHalfLog2Pi = 0.91893853320467274178;

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// zeta(k) for k = 2..kZetaTerms+1, used by the Taylor series of lnGamma(1+z).
constexpr int kZetaTerms = 30;

std::array<double, kZetaTerms> make_zeta_table() {
    std::array<double, kZetaTerms> z{};
    constexpr int n_direct = 60;
    for (int i = 0; i < kZetaTerms; ++i) {
        const int k = i + 2;
        double s = 0.0;
        for (int n = n_direct - 1; n >= 1; --n) s += std::pow(double(n), -k);
        // Euler-Maclaurin tail starting at N = n_direct.
        const double N = n_direct;
        const double Nk = std::pow(N, -k);
        s += N * Nk / (k - 1) + 0.5 * Nk + k * Nk / (12.0 * N) -
             k * (k + 1.0) * (k + 2.0) * Nk / (720.0 * N * N * N) +
             k * (k + 1.0) * (k + 2.0) * (k + 3.0) * (k + 4.0) * Nk / (30240.0 * std::pow(N, 5));
        z[i] = s;
    }
    return z;
}

const std::array<double, kZetaTerms>& zeta_table() {
    static const std::array<double, kZetaTerms> table = make_zeta_table();
    return table;
}

// lnGamma(1+z) = -gamma z + sum_{k>=2} (-1)^k zeta(k) z^k / k, |z| <= 0.25.
double log_gamma_1p_series(double z) {
    const auto& zeta = zeta_table();
    double sum = 0.0;
    double zk = z;
    for (int i = 0; i < kZetaTerms; ++i) {
        zk *= z;
        const int k = i + 2;
        const double term = ((k % 2 == 0) ? 1.0 : -1.0) * zeta[i] * zk / k;
        sum += term;
        if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
    }
    return -kEulerGamma * z + sum;
}

double log_gamma_lanczos(double x) {
    const double xm = x - 1.0;
    double a = kLanczos[0];
    const double t = xm + kLanczosG + 0.5;
    for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (xm + double(i));
    return kHalfLog2Pi + (xm + 0.5) * std::log(t) - t + std::log(a);
}

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw std::domain_error("log_gamma: argument must be positive and finite");
    // Near the zeros of lnGamma at 1 and 2 the Lanczos form loses relative
    // accuracy, so a Taylor series around 1 takes over there.
    if (std::fabs(x - 1.0) <= 0.25) return log_gamma_1p_series(x - 1.0);
    if (std::fabs(x - 2.0) <= 0.25) return log_gamma_1p_series(x - 2.0) + std::log1p(x - 2.0);
    if (x < 0.75) return log_gamma(x + 1.0) - std::log(x);
    return log_gamma_lanczos(x);
}

double digamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw std::domain_error("digamma: argument must be positive and finite");
    double shift = 0.0;
    while (x < 10.0) {
        shift -= 1.0 / x;
        x += 1.0;
    }
    const double r = 1.0 / (x * x);
    // Bernoulli tail B_{2k}/(2k x^{2k}) up to k = 7.
    // clang-format off
    const double tail = r * (1.0 / 12 - r * (1.0 / 120 - r * (1.0 / 252 - r * (1.0 / 240
                      - r * (1.0 / 132 - r * (691.0 / 32760 - r * (1.0 / 12)))))));
    // clang-format on
    return shift + std::log(x) - 0.5 / x - tail;
}

double beta_fn(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("beta_fn: arguments must be positive");
    return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

GammaEnclosure robbins_bounds(double x) {
    if (!(x > 0.0)) throw std::domain_error("robbins_bounds: argument must be positive");
    const double base = 0.5 * std::log(2.0 * kPi) + (x - 0.5) * std::log(x) - x;
    return {std::exp(base + 1.0 / (12.0 * x + 1.0)), std::exp(base + 1.0 / (12.0 * x))};
}

double b1(double alpha) {
    if (!(alpha >= 0.0) || !(alpha < 1.0)) throw std::domain_error("b1: alpha must lie in [0,1)");
    return kPi * (alpha + 1.0) / (2.0 * std::cos(0.5 * kPi * alpha));
}

double b1_gamma_product(double alpha) {
    if (!(alpha >= 0.0) || !(alpha < 1.0)) throw std::domain_error("b1: alpha must lie in [0,1)");
    return std::exp(log_gamma(0.5 * (1.0 - alpha)) + log_gamma(0.5 * (alpha + 3.0)));
}

}  // namespace blowup
