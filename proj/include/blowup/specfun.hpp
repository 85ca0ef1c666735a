#pragma once

// Real special functions on the positive axis. Everything here is binary64.

namespace blowup {

double log_gamma(double x);
double digamma(double x);
double beta_fn(double a, double b);

struct GammaEnclosure {
    double lower;
    double upper;
};

// Robbins' two-sided Stirling bound, valid for every x > 0.
GammaEnclosure robbins_bounds(double x);

// B1(alpha) = Gamma((1-alpha)/2) Gamma((alpha+3)/2), evaluated through the
// reflection identity pi (alpha+1) / (2 cos(pi alpha / 2)).
double b1(double alpha);
// Same quantity from the Gamma product; kept separate so the two can be compared.
double b1_gamma_product(double alpha);

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace blowup
