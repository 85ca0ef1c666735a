#include "blowup/profiles.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

#include "blowup/kernels.hpp"
#include "blowup/specfun.hpp"

namespace blowup {
namespace {

constexpr double kHalfPi = 0.5 * kPi;
constexpr double kEquatorGuard = 1e-12;

double smoothstep(double u, CutoffShape shape) {
    if (shape == CutoffShape::cubic) return u * u * (3.0 - 2.0 * u);
    return u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
}

}  // namespace

ModelParams ModelParams::with_alpha(double alpha) {
    ModelParams p;
    p.alpha = alpha;
    p.gamma = alpha + kDefaultGammaOffset;
    return p;
}

void ModelParams::validate() const {
    auto fail = [](const std::string& m) { throw std::invalid_argument(m); };
    if (!(alpha > 0.0 && alpha < 1.0)) fail("alpha must lie in (0,1)");
    if (!(gamma > alpha)) fail("gamma must exceed alpha");
    if (!(Gamma_amp > 0.0)) fail("Gamma_amp must be positive");
    if (!(quad_tol > 0.0)) fail("quad_tol must be positive");
    const double node = nodal_angle();
    if (!(sigma_cut > 0.0 && sigma_cut < node && node < sigma_max && sigma_max < kHalfPi))
        fail("cutoff angles must satisfy 0 < sigma_cut < arccos(1/sqrt 3) < sigma_max < pi/2");
}

std::vector<std::string> ModelParams::warnings() const {
    std::vector<std::string> out;
    if (gamma <= alpha + 2.5) out.emplace_back("gamma <= alpha + 5/2: initial data would not have finite energy");
    if (alpha > 1.0 / 3.0) out.emplace_back("alpha > 1/3: outside the finite-time collapse regime");
    return out;
}

std::string params_to_text(const ModelParams& p) {
    std::ostringstream os;
    os << std::setprecision(17);
    os << "alpha=" << p.alpha << "\n"
       << "gamma=" << p.gamma << "\n"
       << "Gamma_amp=" << p.Gamma_amp << "\n"
       << "sigma_cut=" << p.sigma_cut << "\n"
       << "sigma_max=" << p.sigma_max << "\n"
       << "quad_tol=" << p.quad_tol << "\n";
    return os.str();
}

ModelParams params_from_text(const std::string& text) {
    std::map<std::string, double*> slots;
    ModelParams p;
    slots["alpha"] = &p.alpha;
    slots["gamma"] = &p.gamma;
    slots["Gamma_amp"] = &p.Gamma_amp;
    slots["sigma_cut"] = &p.sigma_cut;
    slots["sigma_max"] = &p.sigma_max;
    slots["quad_tol"] = &p.quad_tol;
    bool gamma_seen = false;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("config line " + std::to_string(lineno) + ": missing '='");
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        const auto it = slots.find(key);
        if (it == slots.end()) throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(val, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != val.size() || val.empty())
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": bad number '" + val + "'");
        *it->second = v;
        if (key == "gamma") gamma_seen = true;
    }
    if (!gamma_seen) p.gamma = p.alpha + kDefaultGammaOffset;
    return p;
}

ModelParams load_params(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return params_from_text(buf.str());
}

void save_params(const ModelParams& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write config file " + path);
    out << params_to_text(p);
}

double upsilon(double sigma, const CutoffProfile& c) {
    if (sigma <= c.sigma_cut) return 1.0;
    if (sigma >= c.sigma_max) return 0.0;
    const double u = (sigma - c.sigma_cut) / (c.sigma_max - c.sigma_cut);
    return 1.0 - smoothstep(u, c.shape);
}

double theta_star(double sigma, const ModelParams& p) {
    if (sigma > kHalfPi) return -theta_star(kPi - sigma, p);
    return std::pow(std::sin(sigma), p.alpha) * upsilon(sigma, p.cutoff());
}

double drift_sigma_lag(double sigma, double J) {
    if (!(J > 0.0 && J <= 1.0)) throw std::domain_error("drift_sigma_lag: J must lie in (0,1]");
    if (!(sigma >= 0.0) || kHalfPi - sigma < kEquatorGuard) throw std::domain_error("drift_sigma_lag: sigma must lie in [0, pi/2)");
    // arctan(J^3 tan sigma) without forming tan sigma.
    return std::atan2(J * J * J * std::sin(sigma), std::cos(sigma));
}

double theta_J(double sigma, double J, const ModelParams& p) {
    const double lag = drift_sigma_lag(sigma, J);
    const double ups = upsilon(lag, p.cutoff());
    if (ups == 0.0) return 0.0;
    // J^{-3a} sin(lag)^a = tan^a sigma (1 + J^6 tan^2 sigma)^{-a/2}; written with sin/cos to stay finite.
    const double s = std::sin(sigma), c = std::cos(sigma), j3 = J * J * J;
    return std::pow(s / std::hypot(c, j3 * s), p.alpha) * ups;
}

double theta_lim(double sigma, double alpha) {
    if (!(sigma >= 0.0) || kHalfPi - sigma < kEquatorGuard) throw std::domain_error("theta_lim: sigma must lie in [0, pi/2)");
    return std::pow(std::tan(sigma), alpha);
}

double radial_envelope(double s, double gamma) {
    if (!(s >= 0.0)) throw std::domain_error("radial_envelope: s must be nonnegative");
    return std::pow(1.0 + s * s, -0.5 * gamma);
}

double support_angle(double J, const ModelParams& p) {
    if (!(J > 0.0 && J <= 1.0)) throw std::domain_error("support_angle: J must lie in (0,1]");
    const double j3 = J * J * J;
    return std::atan2(std::sin(p.sigma_max), j3 * std::cos(p.sigma_max));
}

}  // namespace blowup
