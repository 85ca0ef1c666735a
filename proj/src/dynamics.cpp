#include "blowup/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "blowup/coefficients.hpp"
#include "blowup/quad.hpp"
#include "blowup/specfun.hpp"

namespace blowup {

std::string to_string(Termination t) {
    switch (t) {
        case Termination::reached_J_min: return "reached_J_min";
        case Termination::reached_t_max: return "reached_t_max";
        case Termination::step_failure: return "step_failure";
    }
    return "unknown";
}

std::string to_string(Regime r) {
    switch (r) {
        case Regime::finite_time_collapse: return "finite_time_collapse";
        case Regime::exponential_decay: return "exponential_decay";
        case Regime::algebraic_decay: return "algebraic_decay";
    }
    return "unknown";
}

std::string Trajectory::to_csv() const {
    std::string out = "t,J,W\n";
    char buf[128];
    for (std::size_t i = 0; i < times.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g\n", times[i], clock[i], strain[i]);
        out += buf;
    }
    return out;
}

// ---- memo table -------------------------------------------------------------

DepletionTable::DepletionTable(const ModelParams& p, double j_floor, int nodes) {
    if (!(j_floor > 0.0 && j_floor < 1.0) || nodes < 4) throw std::invalid_argument("DepletionTable: bad grid");
    const double u0 = std::log(j_floor);
    u_.resize(nodes);
    r_.resize(nodes);
    for (int i = 0; i < nodes; ++i) {
        u_[i] = u0 * (1.0 - double(i) / (nodes - 1));
        r_[i] = depletion_ratio(i == nodes - 1 ? 1.0 : std::exp(u_[i]), p);
    }
    u_.back() = 0.0;
    // Fritsch-Carlson slopes: three-point estimates, zeroed at local extrema.
    const int n = nodes;
    std::vector<double> delta(n - 1);
    for (int i = 0; i + 1 < n; ++i) delta[i] = (r_[i + 1] - r_[i]) / (u_[i + 1] - u_[i]);
    d_.assign(n, 0.0);
    for (int i = 1; i + 1 < n; ++i) {
        const double h0 = u_[i] - u_[i - 1], h1 = u_[i + 1] - u_[i];
        if (delta[i - 1] * delta[i] <= 0.0) continue;
        const double central = (h1 * delta[i - 1] + h0 * delta[i]) / (h0 + h1);
        const double cap = 3.0 * std::min(std::fabs(delta[i - 1]), std::fabs(delta[i]));
        d_[i] = std::copysign(std::min(std::fabs(central), cap), central);
    }
    auto end_slope = [](double h0, double h1, double d0, double d1) {
        double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (s * d0 <= 0.0) return 0.0;
        if (d0 * d1 <= 0.0 && std::fabs(s) > 3.0 * std::fabs(d0)) s = 3.0 * d0;
        return s;
    };
    d_[0] = end_slope(u_[1] - u_[0], u_[2] - u_[1], delta[0], delta[1]);
    d_[n - 1] = end_slope(u_[n - 1] - u_[n - 2], u_[n - 2] - u_[n - 3], delta[n - 2], delta[n - 3]);
}

double DepletionTable::operator()(double J) const {
    const double u = std::log(J);
    if (u <= u_.front()) return r_.front();
    if (u >= u_.back()) return r_.back();
    const double step = u_[1] - u_[0];
    std::size_t i = std::min<std::size_t>(std::size_t((u - u_.front()) / step), u_.size() - 2);
    while (i > 0 && u < u_[i]) --i;
    while (i + 2 < u_.size() && u > u_[i + 1]) ++i;
    const double h = u_[i + 1] - u_[i];
    const double s = (u - u_[i]) / h;
    const double s2 = s * s, s3 = s2 * s;
    return (2 * s3 - 3 * s2 + 1) * r_[i] + (s3 - 2 * s2 + s) * h * d_[i] + (-2 * s3 + 3 * s2) * r_[i + 1] +
           (s3 - s2) * h * d_[i + 1];
}

// ---- strain and time of passage ---------------------------------------------

double strain_model(double J, const ModelParams& p) {
    if (!(J > 0.0 && J <= 1.0)) throw std::domain_error("strain_model: J must lie in (0,1]");
    const double i_rho = p.Gamma_amp * crho(1, p.alpha, p.gamma) / J;
    return -0.5 * i_rho * i_sigma(J, p);
}

double collapse_time(const ModelParams& p, double J_min) {
    if (!(J_min > 0.0 && J_min < 1.0)) throw std::domain_error("collapse_time: J_min must lie in (0,1)");
    const double c = p.Gamma_amp * crho(1, p.alpha, p.gamma);
    const double beta = 1.0 - 3.0 * p.alpha;
    // In u = ln J: dt = 4 J^{1-3 alpha} du / (Gamma C_rho1 R(J)).
    auto f = [&](double u, double, double) {
        const double J = std::exp(u);
        return 4.0 * std::exp(beta * u) / (c * depletion_ratio(J, p));
    };
    QuadOptions o;
    o.abs_tol = 1e-14;
    o.rel_tol = 1e-11;
    return integrate(f, std::log(J_min), 0.0, o).value;
}

// ---- integrator ---------------------------------------------------------------

namespace {

// State variable used by the integrator in each phase.
enum class Var { clock, power, logclock };

struct Phase {
    Var var;
    double beta;  // 1 - 3 alpha, used by the power variable

    double to_J(double y) const {
        switch (var) {
            case Var::clock: return y;
            case Var::power: return std::pow(y, 1.0 / beta);
            case Var::logclock: return std::exp(y);
        }
        return y;
    }
    double from_J(double J) const {
        switch (var) {
            case Var::clock: return J;
            case Var::power: return std::pow(J, beta);
            case Var::logclock: return std::log(J);
        }
        return J;
    }
    bool admissible(double y) const { return var == Var::logclock ? std::isfinite(y) : (y > 0.0 && std::isfinite(y)); }
    // Error scale: relative for J and Y, absolute in ln J (i.e. relative in J).
    double scale(double y0, double y1, double rtol, double atol) const {
        if (var == Var::logclock) return rtol + atol;
        return atol + rtol * std::max(std::fabs(y0), std::fabs(y1));
    }
};

struct Model {
    const ModelParams& p;
    const DepletionTable& table;
    double c;  // (1/4) Gamma C_rho1

    // d ln J / dt
    double log_rate(double J) const { return -c * std::pow(J, 3.0 * p.alpha - 1.0) * table(J); }
    double strain(double J) const { return 2.0 * log_rate(J); }

    double rhs(const Phase& ph, double y) const {
        const double J = ph.to_J(y);
        const double R = table(J);
        switch (ph.var) {
            case Var::clock: return -c * std::pow(J, 3.0 * p.alpha) * R;
            case Var::power: return -ph.beta * c * R;
            case Var::logclock: return -c * std::pow(J, 3.0 * p.alpha - 1.0) * R;
        }
        return 0.0;
    }
};

// Dormand-Prince 5(4) tableau.
constexpr double A21 = 1.0 / 5;
constexpr double A31 = 3.0 / 40, A32 = 9.0 / 40;
constexpr double A41 = 44.0 / 45, A42 = -56.0 / 15, A43 = 32.0 / 9;
constexpr double A51 = 19372.0 / 6561, A52 = -25360.0 / 2187, A53 = 64448.0 / 6561, A54 = -212.0 / 729;
constexpr double A61 = 9017.0 / 3168, A62 = -355.0 / 33, A63 = 46732.0 / 5247, A64 = 49.0 / 176, A65 = -5103.0 / 18656;
constexpr double B1 = 35.0 / 384, B3 = 500.0 / 1113, B4 = 125.0 / 192, B5 = -2187.0 / 6784, B6 = 11.0 / 84;
constexpr double E1 = 71.0 / 57600, E3 = -71.0 / 16695, E4 = 71.0 / 1920, E5 = -17253.0 / 339200, E6 = 22.0 / 525,
                 E7 = -1.0 / 40;

struct StepResult {
    bool ok;
    double y;
    double f_new;
    double err;
};

StepResult dp_step(const Model& m, const Phase& ph, double y, double f0, double h) {
    auto eval = [&](double yy, bool& ok) {
        if (!ph.admissible(yy)) {
            ok = false;
            return 0.0;
        }
        return m.rhs(ph, yy);
    };
    bool ok = true;
    const double k1 = f0;
    const double k2 = eval(y + h * A21 * k1, ok);
    if (!ok) return {false, 0, 0, 0};
    const double k3 = eval(y + h * (A31 * k1 + A32 * k2), ok);
    if (!ok) return {false, 0, 0, 0};
    const double k4 = eval(y + h * (A41 * k1 + A42 * k2 + A43 * k3), ok);
    if (!ok) return {false, 0, 0, 0};
    const double k5 = eval(y + h * (A51 * k1 + A52 * k2 + A53 * k3 + A54 * k4), ok);
    if (!ok) return {false, 0, 0, 0};
    const double k6 = eval(y + h * (A61 * k1 + A62 * k2 + A63 * k3 + A64 * k4 + A65 * k5), ok);
    if (!ok) return {false, 0, 0, 0};
    const double y1 = y + h * (B1 * k1 + B3 * k3 + B4 * k4 + B5 * k5 + B6 * k6);
    const double k7 = eval(y1, ok);
    if (!ok) return {false, 0, 0, 0};
    const double err = h * (E1 * k1 + E3 * k3 + E4 * k4 + E5 * k5 + E6 * k6 + E7 * k7);
    return {true, y1, k7, err};
}

// Cubic Hermite interpolant on one step, theta in [0, 1].
double hermite(double y0, double y1, double f0, double f1, double h, double th) {
    const double t2 = th * th, t3 = t2 * th;
    return (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + th) * h * f0 + (-2 * t3 + 3 * t2) * y1 + (t3 - t2) * h * f1;
}

}  // namespace

Trajectory simulate(const ModelParams& p, double J_stop, double t_max, const SimulateOptions& opt) {
    const DepletionTable table(p, std::min(1e-4, 0.5 * opt.switch_J));
    return simulate(p, table, J_stop, t_max, opt);
}

Trajectory simulate(const ModelParams& p, const DepletionTable& table, double J_stop, double t_max,
                    const SimulateOptions& opt) {
    p.validate();
    if (!(J_stop > 0.0 && J_stop < 1.0)) throw std::invalid_argument("simulate: J_stop must lie in (0,1)");
    if (!(t_max > 0.0)) throw std::invalid_argument("simulate: t_max must be positive");

    const Model m{p, table, 0.25 * p.Gamma_amp * crho(1, p.alpha, p.gamma)};
    const double beta = 1.0 - 3.0 * p.alpha;
    // Y = J^{1-3a} is linear in t near collapse; for exponents near or past the
    // barrier it degenerates, and ln J is the natural autonomous variable instead.
    const Phase late = beta >= 0.05 ? Phase{Var::power, beta} : Phase{Var::logclock, beta};
    Phase ph{Var::clock, beta};

    Trajectory tr;
    tr.params = p;
    double t = 0.0, J = 1.0;
    double y = 1.0;
    tr.times.push_back(t);
    tr.clock.push_back(J);
    tr.strain.push_back(m.strain(J));

    double f = m.rhs(ph, y);
    // Both the first step and the sampling cap scale like 1/Gamma, so t -> Gamma t maps runs onto each other.
    double h = 0.01 / std::fabs(m.log_rate(J));
    double err_prev = 1e-4;
    std::size_t steps = 0;

    while (true) {
        if (++steps > opt.max_steps) {
            tr.terminated = Termination::step_failure;
            return tr;
        }
        const double cap = opt.max_dlogJ / std::fabs(m.log_rate(J));
        h = std::min(h, cap);
        bool last = false;
        if (t + h >= t_max) {
            h = t_max - t;
            last = true;
        }
        if (!(h > 1e-14 * std::max(1.0, t)) && !last) {
            tr.terminated = Termination::step_failure;
            return tr;
        }
        const StepResult s = dp_step(m, ph, y, f, h);
        if (!s.ok) {
            h *= 0.25;
            continue;
        }
        const double e = std::fabs(s.err) / ph.scale(y, s.y, opt.rtol, opt.atol);
        if (e > 1.0) {
            h *= std::max(0.2, 0.9 * std::pow(e, -0.2));
            continue;
        }
        const double J_new = ph.to_J(s.y);
        if (J_new <= J_stop) {
            // Locate the crossing on the Hermite interpolant by bisection.
            const double target = ph.from_J(J_stop);
            double lo = 0.0, hi = 1.0;
            for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double v = hermite(y, s.y, f, s.f_new, h, mid);
                // Every state variable increases with J, so v > target means the crossing is later.
                if (v > target)
                    lo = mid;
                else
                    hi = mid;
            }
            const double th = 0.5 * (lo + hi);
            tr.times.push_back(t + th * h);
            tr.clock.push_back(J_stop);
            tr.strain.push_back(m.strain(J_stop));
            tr.terminated = Termination::reached_J_min;
            return tr;
        }
        t = last ? t_max : t + h;
        y = s.y;
        J = J_new;
        f = s.f_new;
        tr.times.push_back(t);
        tr.clock.push_back(J);
        tr.strain.push_back(m.strain(J));
        if (last) {
            tr.terminated = Termination::reached_t_max;
            return tr;
        }
        if (ph.var == Var::clock && J <= opt.switch_J) {
            ph = late;
            y = ph.from_J(J);
            f = m.rhs(ph, y);
            // Rescale the step to the new variable; the controller recovers within a few steps.
            err_prev = 1e-4;
        }
        // PI controller.
        const double ee = std::max(e, 1e-10);
        double fac = 0.9 * std::pow(ee, -0.7 / 5.0) * std::pow(err_prev, 0.4 / 5.0);
        fac = std::clamp(fac, 0.2, 5.0);
        err_prev = ee;
        h *= fac;
    }
}

// ---- fits -------------------------------------------------------------------------

namespace {

struct LineFit {
    double slope, intercept, ssr, r2;
};

LineFit line_fit(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = double(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    const double slope = sxx > 0 ? sxy / sxx : 0.0;
    const double icpt = my - slope * mx;
    double ssr = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (icpt + slope * x[i]);
        ssr += r * r;
    }
    return {slope, icpt, ssr, syy > 0 ? 1.0 - ssr / syy : 1.0};
}

// Fit ln J = p ln|T - t| + b with the origin T free on one side of the data.
// side = +1 searches T > t_last, side = -1 searches T < t_first.
struct PowerFit {
    LineFit line;
    double origin;
};

PowerFit power_fit(const std::vector<double>& t, const std::vector<double>& lnJ, int side) {
    const double span = t.back() - t.front();
    const double anchor = side > 0 ? t.back() : t.front();
    auto fit_at = [&](double s) {
        const double origin = anchor + side * std::exp(s);
        std::vector<double> x(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) x[i] = std::log(std::fabs(origin - t[i]));
        return PowerFit{line_fit(x, lnJ), origin};
    };
    const double s_lo = std::log(span * 1e-10), s_hi = std::log(span * 1e4);
    constexpr int scan = 240;
    int best = 0;
    double best_ssr = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= scan; ++i) {
        const double s = s_lo + (s_hi - s_lo) * i / scan;
        const double v = fit_at(s).line.ssr;
        if (v < best_ssr) {
            best_ssr = v;
            best = i;
        }
    }
    const double ds = (s_hi - s_lo) / scan;
    double a = s_lo + ds * std::max(0, best - 1), b = s_lo + ds * std::min(scan, best + 1);
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - g * (b - a), d = a + g * (b - a);
    double fc = fit_at(c).line.ssr, fd = fit_at(d).line.ssr;
    for (int it = 0; it < 200 && b - a > 1e-13 * std::max(1.0, std::fabs(a)); ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = fit_at(c).line.ssr;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = fit_at(d).line.ssr;
        }
    }
    return fit_at(0.5 * (a + b));
}

}  // namespace

RateFit rate_fit(const Trajectory& traj, double window) {
    if (!(window > 0.0 && window <= 1.0)) throw std::invalid_argument("rate_fit: window must lie in (0,1]");
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < traj.size(); ++i)
        if (traj.clock[i] <= 1e-2) idx.push_back(i);
    const std::size_t take = std::size_t(std::ceil(window * double(idx.size())));
    if (take < 10) throw InsufficientDataError("rate_fit: fewer than 10 samples with J <= 1e-2 in the window");
    std::vector<double> t, lj;
    for (std::size_t k = idx.size() - take; k < idx.size(); ++k) {
        t.push_back(traj.times[idx[k]]);
        lj.push_back(std::log(traj.clock[idx[k]]));
    }
    const PowerFit pf = power_fit(t, lj, +1);
    return {pf.line.slope, pf.origin, pf.line.r2, std::exp(pf.line.intercept), take};
}

double collapse_amplitude(const ModelParams& p) {
    return (1.0 - 3.0 * p.alpha) * 0.5 * p.Gamma_amp * crho(1, p.alpha, p.gamma) * cw_star(p.alpha);
}

RegimeReport classify_regime(const Trajectory& traj) {
    std::vector<double> t, lj, inv_rate;
    for (std::size_t i = 0; i < traj.size(); ++i) {
        if (traj.clock[i] > 0.1) continue;
        t.push_back(traj.times[i]);
        lj.push_back(std::log(traj.clock[i]));
        inv_rate.push_back(-2.0 / traj.strain[i]);
    }
    if (t.size() < 10) throw InsufficientDataError("classify_regime: fewer than 10 samples with J <= 0.1");

    const ModelParams& p = traj.params;
    RegimeReport rep;
    rep.inverse_rate_slope = line_fit(t, inv_rate).slope;
    const PowerFit collapse = power_fit(t, lj, +1);
    const LineFit expo = line_fit(t, lj);
    const PowerFit alg = power_fit(t, lj, -1);
    rep.r2_collapse = collapse.line.r2;
    rep.r2_exponential = expo.r2;
    rep.r2_algebraic = alg.line.r2;
    if (std::max({rep.r2_collapse, rep.r2_exponential, rep.r2_algebraic}) < 0.99)
        throw IndeterminateRegimeError("classify_regime: no hypothesis fits with R^2 >= 0.99");

    // 1/k is linear in t with slope 3 alpha - 1 once R(J) has settled; only its sign matters.
    constexpr double dead_band = 1e-3;
    const double s = rep.inverse_rate_slope;
    const double crho1 = crho(1, p.alpha, p.gamma);
    rep.t_star = std::numeric_limits<double>::quiet_NaN();
    if (s < -dead_band) {
        rep.regime = Regime::finite_time_collapse;
        rep.r_squared = rep.r2_collapse;
        rep.exponent = collapse.line.slope;
        rep.exponent_expected = 1.0 / (1.0 - 3.0 * p.alpha);
        rep.t_star = collapse.origin;
    } else if (s <= dead_band) {
        rep.regime = Regime::exponential_decay;
        rep.r_squared = rep.r2_exponential;
        rep.exponent = -expo.slope;
        rep.exponent_expected = 0.5 * p.Gamma_amp * crho1 * cw_star(p.alpha);
    } else {
        rep.regime = Regime::algebraic_decay;
        rep.r_squared = rep.r2_algebraic;
        rep.exponent = alg.line.slope;
        rep.exponent_expected = -1.0 / (3.0 * p.alpha - 1.0);
    }
    return rep;
}

std::vector<double> drift_trajectory(double sigma0, const Trajectory& traj) {
    if (!(sigma0 > 0.0 && sigma0 < 0.5 * kPi)) throw std::domain_error("drift_trajectory: sigma0 must lie in (0, pi/2)");
    std::vector<double> out;
    out.reserve(traj.size());
    for (double J : traj.clock) out.push_back(std::atan2(std::sin(sigma0), J * J * J * std::cos(sigma0)));
    return out;
}

}  // namespace blowup
