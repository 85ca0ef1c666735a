#include "blowup/coefficients.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "blowup/limitfield.hpp"
#include "blowup/quad.hpp"
#include "blowup/specfun.hpp"

namespace blowup {
namespace {

constexpr double kHalfPi = 0.5 * kPi;

QuadOptions opts(double tol) {
    QuadOptions o;
    o.abs_tol = tol;
    o.rel_tol = tol;
    return o;
}

}  // namespace

double cw_star(double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw std::domain_error("cw_star: alpha must lie in [0,1)");
    return std::exp(log_gamma(0.5 * (alpha + 3.0)) + log_gamma(1.0 - 0.5 * alpha)) / std::sqrt(kPi);
}

double cw_star_quadrature(double alpha, double tol) {
    auto f = [alpha](double s, double, double to_equator) {
        return std::pow(std::sin(s), alpha + 2.0) * std::pow(std::sin(to_equator), 1.0 - alpha);
    };
    return 1.5 * integrate(f, 0.0, kHalfPi, opts(tol)).value;
}

double depletion_ratio(double J, const ModelParams& p) {
    if (!(J > 0.0 && J <= 1.0)) throw std::domain_error("depletion_ratio: J must lie in (0,1]");
    const double a = p.alpha;
    const double j3 = J * J * J;
    const CutoffProfile cut = p.cutoff();
    // Work in the equatorial distance e = pi/2 - sigma. The drifted angle crosses the
    // cutoff band where tan e ~ J^3, so breakpoints follow that scale outward.
    const double e_max = std::atan2(j3 * std::cos(p.sigma_max), std::sin(p.sigma_max));
    const double e_cut = std::atan2(j3 * std::cos(p.sigma_cut), std::sin(p.sigma_cut));
    std::vector<double> pts{e_max, e_cut};
    for (double e = e_cut * 10.0; e < 0.2 * kHalfPi; e *= 10.0) pts.push_back(e);
    pts.push_back(kHalfPi);

    auto f = [&](double e, double, double) {
        const double se = std::sin(e), ce = std::cos(e);
        const double lag = std::atan2(j3 * ce, se);
        const double ups = upsilon(lag, cut);
        if (ups == 0.0) return 0.0;
        return 3.0 * std::pow(ce, 2.0 + a) * se * std::pow(se * se + j3 * j3 * ce * ce, -0.5 * a) * ups;
    };
    QuadOptions o;
    o.rel_tol = p.quad_tol;
    o.abs_tol = 1e-3 * p.quad_tol;
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) total += integrate(f, pts[i], pts[i + 1], o).value;
    return total;
}

double i_sigma(double J, const ModelParams& p) { return std::pow(J, 3.0 * p.alpha) * depletion_ratio(J, p); }

double cw_of_j(double J, const ModelParams& p) { return 0.5 * depletion_ratio(J, p); }

double cs_star_from(const SpectralSolution& sol, double tol) {
    auto f = [&sol](double x, double, double) { return (1.0 - 3.0 * x * x) * xi_reduced_x(x, sol); };
    QuadOptions o;
    o.abs_tol = tol;
    o.rel_tol = tol;
    return 0.5 * integrate(f, 0.0, 1.0, o).value;
}

double cs_star(double alpha, int n_modes, double tol) { return cs_star_from(solve_f(alpha, n_modes), tol); }

double g_two_mode(double a) {
    const double h1 = -3.0 / (4.0 * (a + 1.0) * (a + 4.0));
    const double h3 = 21.0 * (1.0 - 5.0 * a) / (128.0 * (1.0 - a) * (a + 6.0));
    const double A = a * a + 6.0 * a + 6.0;
    const double B = 2.0 * a * a + 12.0 * a + 27.0;
    const double C0 = a * a + 6.0 * a + 21.0;
    const double k = kappa_of(a);
    const double quad = (a + 1.0) * (a + 1.0) / 105.0 * (28.0 * A * h1 * h1 - 48.0 * B * h1 * h3 - 32.0 * C0 * h3 * h3);
    const double coupling = k * ((1.0 + 3.0 * a) / 8.0 * h1 + (-7.0 + 4.0 * a - 5.0 * a * a) / 16.0 * h3);
    return quad + coupling;
}

double cs_two_mode(double alpha) {
    const double b = b1(alpha);
    return g_two_mode(alpha) * b * b;
}

double tail_slack(double alpha) {
    const double b = b1(alpha);
    return 0.3 * b * b / (eigenvalue_mu(5) - lambda_of(alpha));
}

double crho(int k, double alpha, double gamma) {
    if (k != 1 && k != 2) throw std::invalid_argument("crho: k must be 1 or 2");
    if (!(alpha > 0.0) || !(gamma > alpha)) throw std::domain_error("crho: require gamma > alpha > 0");
    return k == 1 ? 0.5 * beta_fn(0.5 * alpha, 0.5 * (gamma - alpha)) : 0.5 * beta_fn(alpha, gamma - alpha);
}

double crho_quadrature(int k, double alpha, double gamma, double tol) {
    if (k != 1 && k != 2) throw std::invalid_argument("crho: k must be 1 or 2");
    if (!(alpha > 0.0) || !(gamma > alpha)) throw std::domain_error("crho: require gamma > alpha > 0");
    // The k = 2 integrand is the k = 1 integrand with (alpha, gamma) doubled.
    const double a = k * alpha, g = k * gamma;
    // Split at s = 1 and fold [1, inf) onto (0, 1] with s = 1/u. Each half has the
    // form int_0^1 s^{c-1} (1+s^2)^{-g/2} ds; with v = s^c the power singularity,
    // which tanh-sinh cannot resolve for small c, becomes the constant 1/c.
    auto half = [g](double c) {
        return [c, g](double v, double, double) { return std::pow(1.0 + std::pow(v, 2.0 / c), -0.5 * g) / c; };
    };
    const auto inner = half(a), outer = half(g - a);
    return integrate(inner, 0.0, 1.0, opts(tol)).value + integrate(outer, 0.0, 1.0, opts(tol)).value;
}

CoefficientSet compute_coefficients(double alpha, double gamma, int n_modes, double tol) {
    if (!(alpha > 0.0 && alpha <= 1.0 / 3.0 + 1e-12)) throw std::domain_error("compute_coefficients: alpha must lie in (0,1/3]");
    if (!(gamma > alpha)) throw std::domain_error("compute_coefficients: gamma must exceed alpha");
    const SpectralSolution sol = solve_f(alpha, n_modes);
    CoefficientSet c;
    c.alpha = alpha;
    c.gamma = gamma;
    c.cw_star = cw_star(alpha);
    c.cs_star = cs_star_from(sol, tol);
    c.cs_two_mode = cs_two_mode(alpha);
    c.tail_slack = tail_slack(alpha);
    c.crho1 = crho(1, alpha, gamma);
    c.crho2 = crho(2, alpha, gamma);
    c.r_star = riccati_ratio(alpha, gamma, c);
    c.phi = alpha * std::fabs(c.cs_star) / (c.cw_star * c.cw_star);
    c.empirical_tail = tail_norm_beyond(sol, 2);
    c.envelope_ok = std::fabs(c.cs_star - c.cs_two_mode) <= c.tail_slack;
    return c;
}

double riccati_ratio(double, double, const CoefficientSet& c) {
    const double d = c.crho1 * c.cw_star;
    return 2.0 * c.crho2 * c.cs_star / (d * d);
}

double phi_alpha(double alpha, int n_modes) {
    const double w = cw_star(alpha);
    return alpha * std::fabs(cs_star(alpha, n_modes)) / (w * w);
}

ModelAsymptotics model_asymptotics(double J, const CoefficientSet& c, const ModelParams& p) {
    if (!(J > 0.0 && J <= 1.0)) throw std::domain_error("model_asymptotics: J must lie in (0,1]");
    const double a = c.alpha;
    const double w = -p.Gamma_amp * c.crho1 * c.cw_star * std::pow(J, 3.0 * a - 1.0);
    const double pi = p.Gamma_amp * p.Gamma_amp * c.crho2 * c.cs_star * std::pow(J, 6.0 * a - 2.0);
    return {w, pi};
}

std::string coefficient_csv_header() { return "alpha,gamma,cw_star,cs_star,cs_two_mode,tail_slack,crho1,crho2,r_star,phi"; }

std::string coefficient_csv_row(const CoefficientSet& c) {
    char buf[512];
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g", c.alpha, c.gamma, c.cw_star,
                  c.cs_star, c.cs_two_mode, c.tail_slack, c.crho1, c.crho2, c.r_star, c.phi);
    return buf;
}

}  // namespace blowup
