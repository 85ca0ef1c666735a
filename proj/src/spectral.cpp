#include "blowup/spectral.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "blowup/quad.hpp"

namespace blowup {
namespace {

void require_odd(int n, const char* who) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument(std::string(who) + ": n must be an odd positive integer");
}

// |P_n'(0)| for odd n: n!! / (n-1)!!.
double legendre_slope_at_zero(int n) {
    double v = 1.0;
    for (int k = 2; k < n; k += 2) v *= double(k + 1) / double(k);
    return v;
}

}  // namespace

double eigenvalue_mu(int n) {
    require_odd(n, "eigenvalue_mu");
    return double(n) * double(n + 1);
}

double lambda_of(double alpha) { return (alpha + 2.0) * (alpha + 3.0); }

void basis_polynomials(double x, int count, std::vector<double>& r, std::vector<double>& dr) {
    r.assign(count, 0.0);
    dr.assign(count, 0.0);
    const int nmax = 2 * count - 1;
    // P, P', P'' by the three-term recurrence and P'_{n+1} = P'_{n-1} + (2n+1) P_n.
    double p0 = 1.0, p1 = x;
    double d0 = 0.0, d1 = 1.0;
    double s0 = 0.0, s1 = 0.0;
    double norm = 1.0;  // |P_n'(0)| for the current odd n
    r[0] = d1;
    dr[0] = s1;
    for (int n = 1; n < nmax; ++n) {
        const double p2 = ((2 * n + 1) * x * p1 - n * p0) / (n + 1);
        const double d2 = d0 + (2 * n + 1) * p1;
        const double s2 = s0 + (2 * n + 1) * d1;
        p0 = p1;
        p1 = p2;
        d0 = d1;
        d1 = d2;
        s0 = s1;
        s1 = s2;
        const int m = n + 1;
        if (m % 2 == 1) {
            norm *= double(m) / double(m - 1);
            const int i = (m - 1) / 2;
            r[i] = d1 / norm;
            dr[i] = s1 / norm;
        }
    }
}

double phi_n(int n, double x) {
    require_odd(n, "phi_n");
    std::vector<double> r, dr;
    basis_polynomials(x, (n + 1) / 2, r, dr);
    return r.back() * std::sqrt(std::max(0.0, (1.0 - x) * (1.0 + x)));
}

double norm_sq_phi(int n) {
    require_odd(n, "norm_sq_phi");
    const double c = legendre_slope_at_zero(n);
    return double(n) * double(n + 1) / ((2.0 * n + 1.0) * c * c);
}

double inner_h_phi(int n, double alpha, double tol) {
    require_odd(n, "inner_h_phi");
    if (!(alpha >= 0.0 && alpha < 0.5)) throw std::domain_error("inner_h_phi: alpha must lie in [0, 1/2)");
    const int count = (n + 1) / 2;
    auto integrand = [alpha, count](double x, double da, double db) {
        std::vector<double> r, dr;
        basis_polynomials(x, count, r, dr);
        const double one_minus_x2 = db * (1.0 + x);
        return std::pow(da, -alpha) * std::pow(one_minus_x2, 0.5 * (1.0 + alpha)) * r.back();
    };
    QuadOptions opt;
    opt.abs_tol = tol;
    opt.rel_tol = tol;
    return integrate(integrand, 0.0, 1.0, opt).value;
}

double SpectralSolution::coeff(int n) const {
    for (std::size_t i = 0; i < index.size(); ++i)
        if (index[i] == n) return coeffs[i];
    throw std::out_of_range("SpectralSolution: mode not retained");
}

std::string SpectralSolution::to_json() const {
    std::ostringstream os;
    os << std::setprecision(12);
    os << "{\"alpha\": " << alpha << ", \"lambda\": " << lambda_val << ", \"modes\": [";
    for (std::size_t i = 0; i < index.size(); ++i) {
        if (i) os << ", ";
        os << "{\"n\": " << index[i] << ", \"a_n\": " << coeffs[i] * basis_scale[i] << "}";
    }
    os << "], \"h_norm_sq\": " << h_norm_sq << ", \"tail_norm_sq\": " << tail_norm_sq << "}";
    return os.str();
}

SpectralSolution solve_f(double alpha, int n_modes, double tol, const std::vector<double>& scales) {
    if (!(alpha > 0.0 && alpha <= 1.0 / 3.0 + 1e-12)) throw std::domain_error("solve_f: alpha must lie in (0, 1/3]");
    if (n_modes < 2) throw std::invalid_argument("solve_f: need at least two modes");
    if (!scales.empty() && int(scales.size()) != n_modes) throw std::invalid_argument("solve_f: one scale per mode");

    SpectralSolution sol;
    sol.alpha = alpha;
    sol.lambda_val = lambda_of(alpha);
    sol.n_modes = n_modes;

    QuadOptions opt;
    opt.abs_tol = tol;
    opt.rel_tol = tol;
    sol.h_norm_sq = integrate(
                        [alpha](double x, double da, double db) {
                            return std::pow(da, -2.0 * alpha) * std::pow(db * (1.0 + x), alpha);
                        },
                        0.0, 1.0, opt)
                        .value;

    double parseval = 0.0;
    for (int i = 0; i < n_modes; ++i) {
        const int n = 2 * i + 1;
        const double c = scales.empty() ? 1.0 : scales[i];
        const double gap = eigenvalue_mu(n) - sol.lambda_val;
        if (std::fabs(gap) < 1e-9) throw ResonanceError("solve_f: lambda collides with eigenvalue mu_" + std::to_string(n));
        const double hn = c * inner_h_phi(n, alpha, tol);
        const double nn = c * c * norm_sq_phi(n);
        sol.index.push_back(n);
        sol.basis_scale.push_back(c);
        sol.coeffs.push_back(hn / (gap * nn));
        sol.projection.push_back(hn * hn / nn);
        parseval += hn * hn / nn;
    }
    sol.tail_norm_sq = sol.h_norm_sq - parseval;
    return sol;
}

FValues eval_f_x(const SpectralSolution& sol, double x) {
    thread_local std::vector<double> r, dr;
    basis_polynomials(x, sol.n_modes, r, dr);
    double R = 0.0, dR = 0.0;
    for (int i = 0; i < sol.n_modes; ++i) {
        const double w = sol.coeffs[i] * sol.basis_scale[i];
        R += w * r[i];
        dR += w * dr[i];
    }
    const double s2 = std::max(0.0, (1.0 - x) * (1.0 + x));
    return {R * std::sqrt(s2), x * R - s2 * dR, x * R};
}

double eval_f(const SpectralSolution& sol, double sigma) { return eval_f_x(sol, std::cos(sigma)).f; }

double eval_f_prime(const SpectralSolution& sol, double sigma) { return eval_f_x(sol, std::cos(sigma)).fp; }

double tail_norm_beyond(const SpectralSolution& sol, int keep) {
    if (keep < 0 || keep > sol.n_modes) keep = sol.n_modes;
    double s = sol.h_norm_sq;
    for (int i = 0; i < keep; ++i) s -= sol.projection[i];
    return s;
}

TailBounds tail_energy(const SpectralSolution& sol, int keep) {
    if (keep < 0 || keep > sol.n_modes) keep = sol.n_modes;
    if (keep < 2) throw std::invalid_argument("tail_energy: modes 1 and 3 must be retained");
    const double hperp = std::sqrt(std::max(0.0, tail_norm_beyond(sol, keep)));
    const double mu_next = eigenvalue_mu(2 * keep + 1);
    const double gap = mu_next - sol.lambda_val;
    const double l2 = hperp / gap;
    return {l2, std::sqrt(mu_next) * l2, gap};
}

}  // namespace blowup
