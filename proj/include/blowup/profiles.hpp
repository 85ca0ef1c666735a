#pragma once

#include <string>
#include <vector>

namespace blowup {

enum class CutoffShape { quintic, cubic };

struct CutoffProfile {
    double sigma_cut = 0.80;
    double sigma_max = 1.20;
    CutoffShape shape = CutoffShape::quintic;
};

struct ModelParams {
    double alpha = 0.25;
    double gamma = 0.25 + 2.6;
    double Gamma_amp = 1.0;
    double sigma_cut = 0.80;
    double sigma_max = 1.20;
    double quad_tol = 1e-10;
    CutoffShape cutoff_shape = CutoffShape::quintic;

    // Defaults everywhere except alpha; gamma follows alpha + 2.6.
    static ModelParams with_alpha(double alpha);

    CutoffProfile cutoff() const { return {sigma_cut, sigma_max, cutoff_shape}; }

    // Throws std::invalid_argument on a hard violation.
    void validate() const;
    // Soft conditions that do not stop a computation (finite-energy threshold etc).
    std::vector<std::string> warnings() const;
};

inline constexpr double kDefaultGammaOffset = 2.6;

ModelParams load_params(const std::string& path);
void save_params(const ModelParams& p, const std::string& path);
std::string params_to_text(const ModelParams& p);
ModelParams params_from_text(const std::string& text);

double upsilon(double sigma, const CutoffProfile& cutoff);
double theta_star(double sigma, const ModelParams& p);
double drift_sigma_lag(double sigma, double J);
double theta_J(double sigma, double J, const ModelParams& p);
double theta_lim(double sigma, double alpha);
double radial_envelope(double s, double gamma);
double support_angle(double J, const ModelParams& p);

}  // namespace blowup
