#pragma once

#include "blowup/spectral.hpp"

namespace blowup {

struct StrainHat {
    double d_rr;
    double d_ss;
    double d_tt;
    double d_rs;
};

struct LimitVelocity {
    double u_rho;
    double u_sigma;
};

double kappa_of(double alpha);  // (alpha+1)(alpha+3)

LimitVelocity u_lim_components(double rho, double sigma, const SpectralSolution& sol);

// Strain of the homogeneous limit field on the unit sphere; f'' is replaced using the ODE.
StrainHat strain_hat(double sigma, const SpectralSolution& sol);
StrainHat strain_hat_x(double x, const SpectralSolution& sol);

// Pressure source tr((grad u)^2) on the unit sphere, assembled from the strain tensor.
double xi_s_lim(double sigma, const SpectralSolution& sol);
// Same quantity via the reduced quadratic form Q(f, f') + 2 kappa f tan^alpha.
double xi_s_lim_reduced(double sigma, const SpectralSolution& sol);
// Reduced form as a function of x = cos(sigma); no cancellation near the equator.
double xi_reduced_x(double x, const SpectralSolution& sol);

}  // namespace blowup
