#include "blowup/limitfield.hpp"

#include "blowup/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace blowup {
namespace {

// (tan sigma)^alpha written in x = cos sigma.
double tan_pow(double x, double alpha) {
    const double s = std::sqrt(std::max(0.0, (1.0 - x) * (1.0 + x)));
    return std::pow(s / x, alpha);
}

}  // namespace

double kappa_of(double alpha) { return (alpha + 1.0) * (alpha + 3.0); }

LimitVelocity u_lim_components(double rho, double sigma, const SpectralSolution& sol) {
    if (!(rho > 0.0)) throw std::domain_error("u_lim_components: rho must be positive");
    const FValues v = eval_f_x(sol, std::cos(sigma));
    const double radial = std::pow(rho, sol.alpha + 1.0);
    return {radial * (v.fp + v.fcot), -(sol.alpha + 3.0) * radial * v.f};
}

StrainHat strain_hat_x(double x, const SpectralSolution& sol) {
    const double a = sol.alpha;
    const FValues v = eval_f_x(sol, x);
    const double h = tan_pow(x, a);
    StrainHat d;
    d.d_rr = (a + 1.0) * (v.fp + v.fcot);
    d.d_ss = v.fcot - (a + 2.0) * v.fp;
    d.d_tt = v.fp - (a + 2.0) * v.fcot;
    d.d_rs = -kappa_of(a) * v.f - 0.5 * h;
    return d;
}

StrainHat strain_hat(double sigma, const SpectralSolution& sol) {
    if (!(sigma > 0.0 && sigma < 0.5 * kPi)) throw std::domain_error("strain_hat: sigma must lie in (0, pi/2)");
    return strain_hat_x(std::cos(sigma), sol);
}

double xi_s_lim(double sigma, const SpectralSolution& sol) {
    const StrainHat d = strain_hat(sigma, sol);
    const double h = tan_pow(std::cos(sigma), sol.alpha);
    // |D|^2 minus half the squared vorticity; the off-diagonal entry counts twice.
    return d.d_rr * d.d_rr + d.d_ss * d.d_ss + d.d_tt * d.d_tt + 2.0 * d.d_rs * d.d_rs - 0.5 * h * h;
}

double xi_reduced_x(double x, const SpectralSolution& sol) {
    const double a = sol.alpha;
    const FValues v = eval_f_x(sol, x);
    const double k = kappa_of(a);
    const double c1 = a * a + 3.0 * a + 3.0;
    const double c2 = a * a - 3.0;
    const double q = 2.0 * c1 * (v.fp * v.fp + v.fcot * v.fcot) + 2.0 * c2 * v.fp * v.fcot +
                     2.0 * k * k * v.f * v.f;
    return q + 2.0 * k * v.f * tan_pow(x, a);
}

double xi_s_lim_reduced(double sigma, const SpectralSolution& sol) {
    if (!(sigma > 0.0 && sigma < 0.5 * kPi)) throw std::domain_error("xi_s_lim_reduced: sigma must lie in (0, pi/2)");
    return xi_reduced_x(std::cos(sigma), sol);
}

}  // namespace blowup
