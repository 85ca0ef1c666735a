#pragma once

#include <string>

#include "blowup/profiles.hpp"
#include "blowup/spectral.hpp"

namespace blowup {

double cw_star(double alpha);
// (3/2) int_0^{pi/2} sin^{alpha+2} cos^{1-alpha} d sigma by quadrature.
double cw_star_quadrature(double alpha, double tol = 1e-12);

// R(J) = I_sigma(J) / J^{3 alpha}, where I_sigma(J) = int_0^{Sigma(J)} K_W(s) Theta*(arctan(J^3 tan s)) ds.
double depletion_ratio(double J, const ModelParams& p);
double i_sigma(double J, const ModelParams& p);
double cw_of_j(double J, const ModelParams& p);

double cs_star(double alpha, int n_modes = 32, double tol = 1e-10);
double cs_star_from(const SpectralSolution& sol, double tol = 1e-10);

double g_two_mode(double alpha);  // binary64 evaluation of G(alpha)
double cs_two_mode(double alpha);
double tail_slack(double alpha);

double crho(int k, double alpha, double gamma);
double crho_quadrature(int k, double alpha, double gamma, double tol = 1e-12);

struct CoefficientSet {
    double alpha = 0.0;
    double gamma = 0.0;
    double cw_star = 0.0;
    double cs_star = 0.0;
    double cs_two_mode = 0.0;
    double tail_slack = 0.0;
    double crho1 = 0.0;
    double crho2 = 0.0;
    double r_star = 0.0;
    double phi = 0.0;
    // Diagnostics, not part of the scan table.
    double empirical_tail = 0.0;  // Parseval mass of h beyond modes 1 and 3
    bool envelope_ok = false;     // |cs_star - cs_two_mode| <= tail_slack
};

CoefficientSet compute_coefficients(double alpha, double gamma, int n_modes = 32, double tol = 1e-10);
double riccati_ratio(double alpha, double gamma, const CoefficientSet& c);
double phi_alpha(double alpha, int n_modes = 32);

struct ModelAsymptotics {
    double w_model;
    double pi_model;
};

ModelAsymptotics model_asymptotics(double J, const CoefficientSet& c, const ModelParams& p);

std::string coefficient_csv_header();
std::string coefficient_csv_row(const CoefficientSet& c);

}  // namespace blowup
