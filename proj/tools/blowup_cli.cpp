// Command-line front end. Every subcommand writes its data to --out (or stdout)
// and, when --out is given, a sidecar PATH.meta.json with the resolved
// parameters and run details. Data files carry no timestamps, so identical
// arguments give byte-identical data.
//
// Exit codes: 0 success, 1 invalid input, 2 numerical failure
// (quadrature or integrator), 3 invariant or certificate failure.

#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "blowup/coefficients.hpp"
#include "blowup/dynamics.hpp"
#include "blowup/exact.hpp"
#include "blowup/profiles.hpp"
#include "blowup/quad.hpp"
#include "blowup/specfun.hpp"
#include "blowup/spectral.hpp"

using namespace blowup;
using ojson = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kNumeric = 2, kInvariant = 3 };

struct Options {
    std::optional<double> alpha;
    std::string alpha_exact;
    std::string alpha_grid;
    std::optional<double> gamma;
    std::optional<double> Gamma_amp;
    std::optional<double> sigma_cut;
    std::optional<double> sigma_max;
    int modes = 32;
    double tol = 1e-10;
    std::string format = "csv";
    std::string out;
    std::string config;
    double J_stop = 1e-4;
    double t_max = 100.0;
    std::string inputs;      // certify
    std::string trajectory;  // rate-fit
};

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// Parameters after applying config file, then explicit flags.
ModelParams resolve_params(const Options& o, std::optional<double> alpha_override = std::nullopt) {
    ModelParams p;
    if (!o.config.empty()) p = load_params(o.config);
    // An alpha given on the command line drags the default gamma along with it.
    const std::optional<double> a = alpha_override ? alpha_override : o.alpha;
    if (a && *a != p.alpha) {
        p.alpha = *a;
        p.gamma = *a + kDefaultGammaOffset;
    }
    if (o.gamma) p.gamma = *o.gamma;
    if (o.Gamma_amp) p.Gamma_amp = *o.Gamma_amp;
    if (o.sigma_cut) p.sigma_cut = *o.sigma_cut;
    if (o.sigma_max) p.sigma_max = *o.sigma_max;
    p.quad_tol = o.tol;
    p.validate();
    for (const auto& w : p.warnings()) std::cerr << "warning: " << w << "\n";
    return p;
}

std::vector<double> parse_grid(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 3) throw std::invalid_argument("--alpha-grid expects a:b:n");
    double a, b;
    long n;
    try {
        std::size_t u1, u2, u3;
        a = std::stod(parts[0], &u1);
        b = std::stod(parts[1], &u2);
        n = std::stol(parts[2], &u3);
        if (u1 != parts[0].size() || u2 != parts[1].size() || u3 != parts[2].size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("--alpha-grid: cannot parse '" + spec + "'");
    }
    if (n < 1) throw std::invalid_argument("--alpha-grid: need at least one step");
    if (n == 1 && a != b) throw std::invalid_argument("--alpha-grid: a single step needs a == b");
    std::vector<double> g(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) g[i] = n == 1 ? a : a + (b - a) * double(i) / double(n - 1);
    for (double x : g) {
        if (!(x > 0.0 && x < 1.0)) throw std::invalid_argument("--alpha-grid: values must lie in (0,1)");
        if (x > 1.0 / 3.0 + 1e-12) std::cerr << "warning: grid value " << x << " lies outside (0, 1/3]\n";
    }
    return g;
}

// The alpha values a subcommand works on: explicit, exact, or a grid.
std::vector<double> alpha_values(const Options& o, std::optional<ExactRational>& exact) {
    int given = (o.alpha ? 1 : 0) + (o.alpha_exact.empty() ? 0 : 1) + (o.alpha_grid.empty() ? 0 : 1);
    if (given > 1) throw std::invalid_argument("use only one of --alpha, --alpha-exact, --alpha-grid");
    if (!o.alpha_exact.empty()) {
        exact = parse_rational(o.alpha_exact);
        return {to_double(*exact)};
    }
    if (!o.alpha_grid.empty()) return parse_grid(o.alpha_grid);
    if (o.alpha) return {*o.alpha};
    if (!o.config.empty()) return {load_params(o.config).alpha};
    return {ModelParams{}.alpha};
}

void write_output(const Options& o, const std::string& data) {
    if (o.out.empty()) {
        std::cout << data;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write " + o.out);
    f << data;
}

void write_sidecar(const Options& o, const std::string& subcommand, const ModelParams& p, ojson extra) {
    if (o.out.empty()) return;
    ojson m;
    m["subcommand"] = subcommand;
    const std::time_t now = std::time(nullptr);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    m["generated_at"] = stamp;
    m["data_file"] = o.out;
    m["params"] = {{"alpha", p.alpha},         {"gamma", p.gamma},         {"Gamma_amp", p.Gamma_amp},
                   {"sigma_cut", p.sigma_cut}, {"sigma_max", p.sigma_max}, {"quad_tol", p.quad_tol},
                   {"cutoff_shape", p.cutoff_shape == CutoffShape::quintic ? "quintic" : "cubic"}};
    m["defaults"] = {{"sigma_cut", 0.80},
                     {"sigma_max", 1.20},
                     {"gamma", "alpha + 2.6"},
                     {"quad_tol", 1e-10},
                     {"modes", 32}};
    m["modes"] = o.modes;
    m["tol"] = o.tol;
    for (auto it = extra.begin(); it != extra.end(); ++it) m[it.key()] = it.value();
    std::ofstream f(o.out + ".meta.json");
    f << m.dump(2) << "\n";
}

void require_format(const Options& o) {
    if (o.format != "csv" && o.format != "json") throw std::invalid_argument("--format must be csv or json");
}

ojson coeff_json(const CoefficientSet& c) {
    return {{"alpha", c.alpha},         {"gamma", c.gamma},   {"cw_star", c.cw_star},
            {"cs_star", c.cs_star},     {"cs_two_mode", c.cs_two_mode}, {"tail_slack", c.tail_slack},
            {"crho1", c.crho1},         {"crho2", c.crho2},   {"r_star", c.r_star},
            {"phi", c.phi}};
}

int cmd_coeffs(const Options& o) {
    require_format(o);
    std::optional<ExactRational> exact;
    const std::vector<double> grid = alpha_values(o, exact);
    std::vector<CoefficientSet> rows;
    std::vector<std::string> problems;
    ModelParams last;
    for (double a : grid) {
        const ModelParams p = resolve_params(o, a);
        last = p;
        CoefficientSet c = compute_coefficients(a, p.gamma, o.modes, o.tol);
        if (exact) {
            const double b = b1(a);
            c.cs_two_mode = to_double(g_exact(*exact)) * b * b;
        }
        // Internal cross-checks: closed forms against quadrature, then the documented bounds.
        if (std::fabs(cw_star_quadrature(a) - c.cw_star) > 1e-9 * c.cw_star)
            problems.push_back("alpha=" + fmt12(a) + ": C_W* closed form and quadrature disagree");
        for (int k : {1, 2}) {
            const double ref = k == 1 ? c.crho1 : c.crho2;
            if (std::fabs(crho_quadrature(k, a, p.gamma) - ref) > 1e-8 * ref)
                problems.push_back("alpha=" + fmt12(a) + ": C_rho" + std::to_string(k) + " closed form and quadrature disagree");
        }
        if (c.phi > 6.0 / 7.0) problems.push_back("alpha=" + fmt12(a) + ": phi exceeds 6/7");
        if (!c.envelope_ok)
            problems.push_back("alpha=" + fmt12(a) + ": |cs_star - cs_two_mode| = " + fmt12(std::fabs(c.cs_star - c.cs_two_mode)) +
                               " exceeds tail_slack = " + fmt12(c.tail_slack));
        rows.push_back(c);
    }
    std::string data;
    if (o.format == "csv") {
        data = coefficient_csv_header() + "\n";
        for (const auto& c : rows) data += coefficient_csv_row(c) + "\n";
    } else {
        ojson arr = ojson::array();
        for (const auto& c : rows) arr.push_back(coeff_json(c));
        data = arr.dump(2) + "\n";
    }
    write_output(o, data);
    ojson extra;
    extra["rows"] = rows.size();
    extra["invariant_violations"] = problems;
    if (exact) extra["alpha_exact"] = to_string(*exact);
    if (!o.alpha_grid.empty()) extra["alpha_grid"] = o.alpha_grid;
    write_sidecar(o, "coeffs", last, extra);
    for (const auto& s : problems) std::cerr << "invariant: " << s << "\n";
    return problems.empty() ? kOk : kInvariant;
}

int cmd_certify(const Options& o) {
    const CertificateInputs in = o.inputs.empty() ? CertificateInputs::defaults() : load_certificate_inputs(o.inputs);
    const CertificateReport r = certify_phi_bound(in);
    write_output(o, r.to_json() + "\n");
    ojson extra;
    extra["inputs"] = o.inputs.empty() ? "built-in" : o.inputs;
    extra["overall"] = r.overall() ? "pass" : "fail";
    write_sidecar(o, "certify", ModelParams{}, extra);
    for (const auto& c : r.clauses)
        if (!c.pass) std::cerr << "clause failed: " << c.id << " (" << c.statement << ")\n";
    return r.overall() ? kOk : kInvariant;
}

int cmd_solve_f(const Options& o) {
    require_format(o);
    std::optional<ExactRational> exact;
    const std::vector<double> grid = alpha_values(o, exact);
    if (grid.size() != 1) throw std::invalid_argument("solve-f takes a single alpha");
    const ModelParams p = resolve_params(o, grid[0]);
    const SpectralSolution s = solve_f(grid[0], o.modes);
    std::string data;
    if (o.format == "json") {
        data = s.to_json() + "\n";
    } else {
        data = "n,a_n\n";
        for (std::size_t i = 0; i < s.index.size(); ++i)
            data += std::to_string(s.index[i]) + "," + fmt12(s.coeffs[i] * s.basis_scale[i]) + "\n";
    }
    write_output(o, data);
    const TailBounds tb = tail_energy(s);
    write_sidecar(o, "solve-f", p,
                  {{"lambda", s.lambda_val}, {"tail_norm_sq", s.tail_norm_sq}, {"tail_l2_bound", tb.l2_bound}, {"gap", tb.gap}});
    return kOk;
}

ojson fit_json(const ModelParams& p, const Trajectory& tr) {
    const RegimeReport r = classify_regime(tr);
    ojson j;
    j["alpha"] = p.alpha;
    j["gamma"] = p.gamma;
    j["Gamma_amp"] = p.Gamma_amp;
    j["regime"] = to_string(r.regime);
    double exponent = r.exponent, t_star = r.t_star, r2 = r.r_squared;
    if (r.regime == Regime::finite_time_collapse) {
        try {
            const RateFit f = rate_fit(tr);
            exponent = f.exponent;
            t_star = f.t_star;
            r2 = f.r_squared;
        } catch (const InsufficientDataError&) {
            // keep the classifier's own window
        }
    }
    j["exponent"] = exponent;
    j["exponent_expected"] = r.exponent_expected;
    if (std::isfinite(t_star)) j["t_star"] = t_star;
    else j["t_star"] = nullptr;
    j["r_squared"] = r2;
    return j;
}

std::string stem_path(const std::string& out, const std::string& suffix) {
    const auto dot = out.rfind('.');
    const auto slash = out.rfind('/');
    const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
    return (has_ext ? out.substr(0, dot) : out) + suffix;
}

int cmd_simulate(const Options& o) {
    std::optional<ExactRational> exact;
    const std::vector<double> grid = alpha_values(o, exact);
    if (grid.size() != 1) throw std::invalid_argument("simulate takes a single alpha");
    const ModelParams p = resolve_params(o, grid[0]);
    const Trajectory tr = simulate(p, o.J_stop, o.t_max);
    if (tr.terminated == Termination::step_failure) {
        std::cerr << "integrator step failure at t=" << (tr.size() ? tr.times.back() : 0.0) << "\n";
        return kNumeric;
    }
    const std::string fit = fit_json(p, tr).dump(2) + "\n";
    if (o.out.empty()) {
        std::cout << fit;
        return kOk;
    }
    write_output(o, tr.to_csv());
    const std::string fit_path = stem_path(o.out, ".fit.json");
    std::ofstream(fit_path, std::ios::binary) << fit;
    write_sidecar(o, "simulate", p,
                  {{"J_stop", o.J_stop}, {"t_max", o.t_max}, {"samples", tr.size()}, {"termination", to_string(tr.terminated)},
                   {"fit_file", fit_path}});
    return kOk;
}

Trajectory read_trajectory(const std::string& path, const ModelParams& p) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open trajectory " + path);
    std::string line;
    if (!std::getline(in, line) || line != "t,J,W") throw std::invalid_argument("trajectory must start with the header t,J,W");
    Trajectory tr;
    tr.params = p;
    tr.terminated = Termination::reached_J_min;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        double t, J, W;
        char c1, c2, rest;
        std::istringstream ls(line);
        if (!(ls >> t >> c1 >> J >> c2 >> W) || c1 != ',' || c2 != ',' || (ls >> rest))
            throw std::invalid_argument("bad trajectory row: " + line);
        tr.times.push_back(t);
        tr.clock.push_back(J);
        tr.strain.push_back(W);
    }
    return tr;
}

int cmd_rate_fit(const Options& o) {
    if (o.trajectory.empty()) throw std::invalid_argument("rate-fit needs --trajectory PATH");
    const ModelParams p = resolve_params(o);
    const Trajectory tr = read_trajectory(o.trajectory, p);
    write_output(o, fit_json(p, tr).dump(2) + "\n");
    write_sidecar(o, "rate-fit", p, {{"trajectory", o.trajectory}, {"samples", tr.size()}});
    return kOk;
}

int cmd_scan_phi(const Options& o) {
    require_format(o);
    Options g = o;
    if (g.alpha_grid.empty() && !g.alpha && g.alpha_exact.empty()) g.alpha_grid = "0.01:0.33:33";
    std::optional<ExactRational> exact;
    const std::vector<double> grid = alpha_values(g, exact);
    const double bound = 6.0 / 7.0;
    int above = 0;
    ojson arr = ojson::array();
    std::string csv = "alpha,cw_star,cs_star,phi\n";
    for (double a : grid) {
        if (!(a > 0.0 && a <= 1.0 / 3.0 + 1e-12)) throw std::invalid_argument("scan-phi: alpha must lie in (0, 1/3]");
        const double cw = cw_star(a), cs = cs_star(a, o.modes, o.tol), phi = a * std::fabs(cs) / (cw * cw);
        if (phi > bound) ++above;
        csv += fmt12(a) + "," + fmt12(cw) + "," + fmt12(cs) + "," + fmt12(phi) + "\n";
        arr.push_back({{"alpha", a}, {"cw_star", cw}, {"cs_star", cs}, {"phi", phi}});
    }
    write_output(o, o.format == "csv" ? csv : arr.dump(2) + "\n");
    write_sidecar(o, "scan-phi", resolve_params(g, grid.back()), {{"rows", grid.size()}, {"bound", "6/7"}, {"above_bound", above}});
    if (above) std::cerr << "invariant: " << above << " grid points exceed 6/7\n";
    return above ? kInvariant : kOk;
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--alpha", o.alpha, "Hoelder exponent alpha");
    sub->add_option("--alpha-exact", o.alpha_exact, "alpha as an exact rational, e.g. 1/3");
    sub->add_option("--alpha-grid", o.alpha_grid, "grid a:b:n with n evenly spaced values");
    sub->add_option("--gamma", o.gamma, "radial decay exponent (default alpha + 2.6)");
    sub->add_option("--Gamma", o.Gamma_amp, "amplitude Gamma (default 1)");
    sub->add_option("--sigma-cut", o.sigma_cut, "start of the angular cutoff (default 0.80)");
    sub->add_option("--sigma-max", o.sigma_max, "end of the angular cutoff (default 1.20)");
    sub->add_option("--modes", o.modes, "retained odd modes (default 32)")->check(CLI::Range(2, 4096));
    sub->add_option("--tol", o.tol, "quadrature tolerance (default 1e-10)")->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", o.out, "output path; a PATH.meta.json sidecar is written next to it");
    sub->add_option("--config", o.config, "key=value parameter file; flags override it");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification toolkit for the linear self-similar collapse model"};
    app.require_subcommand(1);
    Options o;

    auto* coeffs = app.add_subcommand("coeffs", "coefficient table at one alpha or over a grid");
    add_common(coeffs, o);
    auto* certify = app.add_subcommand("certify", "exact rational certificate for the Phi bound");
    certify->add_option("--inputs", o.inputs, "JSON file overriding certificate inputs");
    certify->add_option("--out", o.out, "output path");
    auto* solvef = app.add_subcommand("solve-f", "spectral coefficients of the angular potential");
    add_common(solvef, o);
    auto* sim = app.add_subcommand("simulate", "integrate the clock ODE and classify the regime");
    add_common(sim, o);
    sim->add_option("--J-stop", o.J_stop, "stop when J falls below this value (default 1e-4)");
    sim->add_option("--t-max", o.t_max, "final time (default 100)");
    auto* fit = app.add_subcommand("rate-fit", "fit and classify a stored trajectory");
    add_common(fit, o);
    fit->add_option("--trajectory", o.trajectory, "trajectory CSV with header t,J,W")->required();
    auto* scan = app.add_subcommand("scan-phi", "Phi(alpha) over a grid against the 6/7 bound");
    add_common(scan, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalid;
    }

    try {
        if (*coeffs) return cmd_coeffs(o);
        if (*certify) return cmd_certify(o);
        if (*solvef) return cmd_solve_f(o);
        if (*sim) return cmd_simulate(o);
        if (*fit) return cmd_rate_fit(o);
        if (*scan) return cmd_scan_phi(o);
    } catch (const QuadratureError& e) {
        std::cerr << "quadrature failure: " << e.what() << "\n";
        return kNumeric;
    } catch (const ResonanceError& e) {
        std::cerr << "spectral failure: " << e.what() << "\n";
        return kNumeric;
    } catch (const InsufficientDataError& e) {
        std::cerr << "fit failure: " << e.what() << "\n";
        return kInvariant;
    } catch (const IndeterminateRegimeError& e) {
        std::cerr << "fit failure: " << e.what() << "\n";
        return kInvariant;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNumeric;
    }
    return kInvalid;
}
