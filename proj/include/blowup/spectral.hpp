#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace blowup {

// Odd-index eigenpairs of L f = -f'' - cot f' + f / sin^2 on [0, pi/2] with
// f(0) = 0 and f'(pi/2) = 0. In x = cos(sigma) the eigenfunctions are
// phi_n = R_n(x) sqrt(1 - x^2) with R_n = P_n' / |P_n'(0)|.

double eigenvalue_mu(int n);
double lambda_of(double alpha);  // (alpha+2)(alpha+3)

double phi_n(int n, double x);
double norm_sq_phi(int n);
double inner_h_phi(int n, double alpha, double tol = 1e-13);

// R_n and dR_n/dx for every odd n <= 2*count-1, written into r and dr.
void basis_polynomials(double x, int count, std::vector<double>& r, std::vector<double>& dr);

struct SpectralSolution {
    double alpha = 0.0;
    double lambda_val = 0.0;
    int n_modes = 0;
    std::vector<int> index;          // 1, 3, 5, ...
    std::vector<double> coeffs;      // a_n in the (possibly rescaled) basis
    std::vector<double> basis_scale; // phi_n is multiplied by this before use
    std::vector<double> projection;  // <h,phi_n>^2 / |phi_n|^2
    double h_norm_sq = 0.0;
    double tail_norm_sq = 0.0;

    double coeff(int n) const;
    std::string to_json() const;
};

class ResonanceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// scales, if given, rescales each basis function; the reconstructed f does not change.
SpectralSolution solve_f(double alpha, int n_modes = 32, double tol = 1e-13,
                         const std::vector<double>& scales = {});

struct FValues {
    double f;     // f
    double fp;    // df/dsigma
    double fcot;  // f cot(sigma)
};

// Evaluation at x = cos(sigma), so the equator x -> 0 is resolved without cancellation.
FValues eval_f_x(const SpectralSolution& sol, double x);
double eval_f(const SpectralSolution& sol, double sigma);
double eval_f_prime(const SpectralSolution& sol, double sigma);

struct TailBounds {
    double l2_bound;
    double energy_bound;
    double gap;  // mu_next - lambda
};

// Bounds on the remainder beyond the first `keep` modes (default: all retained).
TailBounds tail_energy(const SpectralSolution& sol, int keep = -1);
double tail_norm_beyond(const SpectralSolution& sol, int keep);

}  // namespace blowup
