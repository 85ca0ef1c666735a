#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "blowup/profiles.hpp"

namespace blowup {

enum class Termination { reached_J_min, reached_t_max, step_failure };
enum class Regime { finite_time_collapse, exponential_decay, algebraic_decay };

std::string to_string(Termination t);
std::string to_string(Regime r);

struct Trajectory {
    std::vector<double> times;
    std::vector<double> clock;   // J
    std::vector<double> strain;  // W
    ModelParams params;
    Termination terminated = Termination::step_failure;

    std::size_t size() const { return times.size(); }
    std::string to_csv() const;
};

// R(J) = I_sigma(J) / J^{3 alpha} tabulated on a log-spaced grid and read back
// with monotone cubic Hermite interpolation. Below the grid R is held constant;
// its true deviation there is of order J^{3(2 - alpha)}.
class DepletionTable {
public:
    explicit DepletionTable(const ModelParams& p, double j_floor = 1e-4, int nodes = 1025);
    double operator()(double J) const;
    double j_floor() const { return std::exp(u_.front()); }

private:
    std::vector<double> u_;  // ln J nodes, ascending
    std::vector<double> r_;
    std::vector<double> d_;  // dR/du at the nodes
};

class InsufficientDataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IndeterminateRegimeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Uncached on-axis strain W(J) = -(1/2) I_rho I_sigma with I_rho = Gamma C_rho1 / J.
double strain_model(double J, const ModelParams& p);

// Time for the clock to fall from 1 to J_min: int_{J_min}^1 2 dJ / (-J W(J)).
double collapse_time(const ModelParams& p, double J_min);

struct SimulateOptions {
    double rtol = 1e-8;
    double atol = 1e-12;
    double switch_J = 1e-2;          // change of variable below this clock value
    double max_dlogJ = 0.05;         // cap on |d ln J| per step, for sampling density
    std::size_t max_steps = 2000000;
};

Trajectory simulate(const ModelParams& p, double J_stop, double t_max, const SimulateOptions& opt = {});
Trajectory simulate(const ModelParams& p, const DepletionTable& table, double J_stop, double t_max,
                    const SimulateOptions& opt = {});

struct RateFit {
    double exponent = 0.0;    // slope of ln J against ln(T* - t)
    double t_star = 0.0;
    double r_squared = 0.0;
    double prefactor = 0.0;   // exp(intercept)
    std::size_t samples = 0;
};

RateFit rate_fit(const Trajectory& traj, double window = 0.3);

// Leading collapse constant A = (1 - 3 alpha)(Gamma/2) C_rho1 C_W*; J ~ (A (T* - t))^{1/(1-3 alpha)}.
double collapse_amplitude(const ModelParams& p);

struct RegimeReport {
    Regime regime = Regime::finite_time_collapse;
    double inverse_rate_slope = 0.0;  // d(1/k)/dt with k = -d ln J / dt
    double r2_collapse = 0.0;
    double r2_exponential = 0.0;
    double r2_algebraic = 0.0;
    double r_squared = 0.0;           // of the selected hypothesis
    double exponent = 0.0;
    double exponent_expected = 0.0;
    double t_star = 0.0;              // NaN unless the regime is finite_time_collapse
};

RegimeReport classify_regime(const Trajectory& traj);

std::vector<double> drift_trajectory(double sigma0, const Trajectory& traj);

}  // namespace blowup
