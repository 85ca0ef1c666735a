#include "blowup/exact.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "blowup/specfun.hpp"
#include "json.hpp"

namespace blowup {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

ExactRational rat(long long num, long long den) {
    if (den == 0) throw std::domain_error("rat: zero denominator");
    // Boost's rational normalisation rejects a negative denominator, so fold the sign first.
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return ExactRational(BigInt(num), BigInt(den));
}

ExactRational parse_rational(const std::string& raw) {
    std::string text = raw;
    text.erase(std::remove_if(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }), text.end());
    if (text.empty()) throw std::invalid_argument("parse_rational: empty input");
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const ExactRational n = parse_rational(text.substr(0, slash));
        const ExactRational d = parse_rational(text.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("parse_rational: zero denominator");
        return n / d;
    }
    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') negative = text[i++] == '-';
    BigInt mant = 0;
    long long scale = 0;
    bool seen_digit = false, seen_point = false;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mant = mant * 10 + (c - '0');
            if (seen_point) --scale;
            seen_digit = true;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!seen_digit) throw std::invalid_argument("parse_rational: no digits in '" + raw + "'");
    if (i < text.size()) {
        if (text[i] != 'e' && text[i] != 'E') throw std::invalid_argument("parse_rational: bad character in '" + raw + "'");
        std::size_t used = 0;
        long long e = 0;
        try {
            e = std::stoll(text.substr(i + 1), &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_rational: bad exponent in '" + raw + "'");
        }
        if (used != text.size() - i - 1) throw std::invalid_argument("parse_rational: bad exponent in '" + raw + "'");
        scale += e;
    }
    ExactRational q(mant);
    const BigInt ten_pow = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(std::llabs(scale)));
    q = scale >= 0 ? q * ExactRational(ten_pow) : q / ExactRational(ten_pow);
    return negative ? -q : q;
}

std::string to_string(const ExactRational& q) {
    const BigInt d = denominator(q);
    if (d == 1) return numerator(q).str();
    return numerator(q).str() + "/" + d.str();
}

double to_double(const ExactRational& q) { return q.convert_to<double>(); }

// ---- polynomials ----------------------------------------------------------

RationalPolynomial::RationalPolynomial(std::vector<ExactRational> ascending) : c_(std::move(ascending)) { trim(); }

RationalPolynomial RationalPolynomial::constant(const ExactRational& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::monomial(const ExactRational& c, std::size_t degree) {
    std::vector<ExactRational> v(degree + 1, ExactRational(0));
    v[degree] = c;
    return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::linear(const ExactRational& c0, const ExactRational& c1) {
    return RationalPolynomial({c0, c1});
}

void RationalPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ExactRational RationalPolynomial::operator()(const ExactRational& x) const {
    ExactRational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
    std::vector<ExactRational> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * ExactRational(static_cast<long long>(k)));
    return RationalPolynomial(std::move(d));
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
    std::vector<ExactRational> v(std::max(a.c_.size(), b.c_.size()), ExactRational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return RationalPolynomial(std::move(v));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a + ExactRational(-1) * b;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<ExactRational> v(a.c_.size() + b.c_.size() - 1, ExactRational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return RationalPolynomial(std::move(v));
}

RationalPolynomial operator*(const ExactRational& s, const RationalPolynomial& a) {
    std::vector<ExactRational> v = a.c_;
    for (auto& x : v) x *= s;
    return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::divide_exact(const RationalPolynomial& d) const {
    if (d.is_zero()) throw std::domain_error("divide_exact: division by the zero polynomial");
    std::vector<ExactRational> rem = c_;
    const int dd = d.degree();
    if (degree() < dd) {
        if (!is_zero()) throw std::domain_error("divide_exact: nonzero remainder");
        return {};
    }
    std::vector<ExactRational> quo(degree() - dd + 1, ExactRational(0));
    for (int k = degree() - dd; k >= 0; --k) {
        const ExactRational t = rem[k + dd] / d.c_[dd];
        quo[k] = t;
        for (int j = 0; j <= dd; ++j) rem[k + j] -= t * d.c_[j];
    }
    for (const auto& r : rem)
        if (r != 0) throw std::domain_error("divide_exact: nonzero remainder");
    return RationalPolynomial(std::move(quo));
}

RationalPolynomial RationalPolynomial::pow(unsigned e) const {
    RationalPolynomial out = constant(ExactRational(1));
    for (unsigned i = 0; i < e; ++i) out = out * *this;
    return out;
}

// ---- two-mode constants -----------------------------------------------------

namespace {

void require_nonzero(const ExactRational& v, const char* what) {
    if (v == 0) throw PoleError(std::string(what) + ": alpha sits on a pole");
}

struct Abc {
    ExactRational A, B, C0, kappa;
};

Abc abc(const ExactRational& a) {
    return {a * a + 6 * a + 6, 2 * a * a + 12 * a + 27, a * a + 6 * a + 21, (a + 1) * (a + 3)};
}

// Polynomials in alpha used by the symbolic re-derivation.
RationalPolynomial lin(long long c0, long long c1) { return RationalPolynomial::linear(rat(c0), rat(c1)); }

}  // namespace

ExactRational hat_a1(const ExactRational& alpha) {
    const ExactRational den = 4 * (alpha + 1) * (alpha + 4);
    require_nonzero(den, "hat_a1");
    return ExactRational(-3) / den;
}

ExactRational hat_a3(const ExactRational& alpha) {
    const ExactRational den = 128 * (1 - alpha) * (alpha + 6);
    require_nonzero(den, "hat_a3");
    return 21 * (1 - 5 * alpha) / den;
}

ExactRational g_exact(const ExactRational& a) {
    const ExactRational h1 = hat_a1(a), h3 = hat_a3(a);
    const Abc k = abc(a);
    const ExactRational quad = (a + 1) * (a + 1) / 105 * (28 * k.A * h1 * h1 - 48 * k.B * h1 * h3 - 32 * k.C0 * h3 * h3);
    const ExactRational coupling = k.kappa * ((1 + 3 * a) / 8 * h1 + (-7 + 4 * a - 5 * a * a) / 16 * h3);
    return quad + coupling;
}

ExactRational g_common_denominator(const ExactRational& a, const RationalPolynomial& n_poly) {
    const ExactRational d = (1 - a) * (1 - a) * (a + 4) * (a + 4) * (a + 6) * (a + 6);
    require_nonzero(d, "g_common_denominator");
    return -15 * n_poly(a) / (2048 * d);
}

ExactRational g_common_denominator(const ExactRational& a) { return g_common_denominator(a, n_polynomial_listed()); }

ExactRational j_moment(int j) {
    if (j < 0) throw std::invalid_argument("j_moment: j must be nonnegative");
    return rat(1, 2 * j + 1) - rat(3, 2 * j + 3);
}

ExactRational i_moment_over_b1(int k, const ExactRational& alpha) {
    if (k < 0) throw std::invalid_argument("i_moment_over_b1: k must be nonnegative");
    // I_k = B(k + (1-a)/2, (a+3)/2) / 2; lower the first Gamma argument to (1-a)/2.
    ExactRational v = rat(1, 2);
    for (int i = 0; i < k; ++i) v *= (2 * i + 1 - alpha) / 2;
    for (int i = 2; i <= k + 1; ++i) v /= i;
    return v;
}

ExactRational g_from_integrals(const ExactRational& a) {
    const ExactRational h1 = hat_a1(a), h3 = hat_a3(a);
    const Abc k = abc(a);
    const ExactRational c1 = a * a + 3 * a + 3;
    const ExactRational c2 = a * a - 3;
    // Polynomials in y = x^2.
    const RationalPolynomial y = RationalPolynomial::monomial(ExactRational(1), 1);
    const RationalPolynomial p = RationalPolynomial::linear(h1 - 11 * h3, 15 * h3);
    const RationalPolynomial q = RationalPolynomial::linear(h1 - h3, 5 * h3);
    const RationalPolynomial one_minus_y = RationalPolynomial::linear(ExactRational(1), ExactRational(-1));
    const RationalPolynomial Q = (2 * c1) * (y * (p * p + q * q)) + (2 * c2) * (y * p * q) +
                                 (2 * k.kappa * k.kappa) * (q * q * one_minus_y);
    ExactRational quad(0);
    for (std::size_t j = 0; j < Q.coefficients().size(); ++j) quad += Q.coefficients()[j] * j_moment(int(j));
    quad /= 2;

    const RationalPolynomial weight = RationalPolynomial::linear(ExactRational(1), ExactRational(-3)) * q;
    ExactRational coupling(0);
    for (std::size_t j = 0; j < weight.coefficients().size(); ++j)
        coupling += weight.coefficients()[j] * i_moment_over_b1(int(j), a);
    coupling *= k.kappa;
    return quad + coupling;
}

RationalPolynomial n_polynomial_listed() {
    return RationalPolynomial({rat(-672), rat(18528), rat(1614), rat(1587), rat(5680), rat(10109), rat(9174), rat(3533),
                               rat(588), rat(35)});
}

RationalPolynomial n_polynomial_derived() {
    const RationalPolynomial ap1 = lin(1, 1), ap3 = lin(3, 1), ap4 = lin(4, 1), ap6 = lin(6, 1), om = lin(1, -1);
    const RationalPolynomial D = om.pow(2) * ap4.pow(2) * ap6.pow(2);
    const RationalPolynomial A({rat(6), rat(6), rat(1)});
    const RationalPolynomial B({rat(27), rat(12), rat(2)});
    const RationalPolynomial C0({rat(21), rat(6), rat(1)});
    const RationalPolynomial kappa = ap1 * ap3;
    // hat a1 = P1 / Q1, hat a3 = P3 / Q3.
    const RationalPolynomial P1 = RationalPolynomial::constant(rat(-3));
    const RationalPolynomial Q1 = rat(4) * (ap1 * ap4);
    const RationalPolynomial P3 = rat(21) * lin(1, -5);
    const RationalPolynomial Q3 = rat(128) * (om * ap6);

    const RationalPolynomial w = ap1.pow(2) * D;
    const RationalPolynomial quad =
        rat(1, 105) * (rat(28) * (A * P1 * P1 * w).divide_exact(Q1 * Q1) - rat(48) * (B * P1 * P3 * w).divide_exact(Q1 * Q3) -
                       rat(32) * (C0 * P3 * P3 * w).divide_exact(Q3 * Q3));
    const RationalPolynomial c_a1 = rat(1, 8) * lin(1, 3);
    const RationalPolynomial c_a3 = rat(1, 16) * RationalPolynomial({rat(-7), rat(4), rat(-5)});
    const RationalPolynomial coupling =
        (kappa * c_a1 * P1 * D).divide_exact(Q1) + (kappa * c_a3 * P3 * D).divide_exact(Q3);
    return rat(2048, -15) * (quad + coupling);
}

std::vector<ExactRational> n_prime_coefficients() {
    return {rat(18528), rat(3228), rat(4761), rat(22720), rat(50545), rat(55044), rat(24731), rat(4704), rat(315)};
}

ExactRational d_log_derivative(const ExactRational& a) {
    require_nonzero(1 - a, "d_log_derivative");
    require_nonzero(a + 4, "d_log_derivative");
    require_nonzero(a + 6, "d_log_derivative");
    return ExactRational(-2) / (1 - a) + ExactRational(2) / (a + 4) + ExactRational(2) / (a + 6);
}

// ---- certificate -----------------------------------------------------------

CertificateInputs CertificateInputs::defaults() {
    CertificateInputs in;
    in.n_coefficients = n_polynomial_listed().coefficients();
    in.n_prime_coefficients = blowup::n_prime_coefficients();
    in.g_at_zero = rat(35, 4096);
    in.g_at_third = rat(-2255905, 17570592);
    in.delta = rat(3, 10);
    in.gamma_third_upper = parse_rational("2.680");
    in.gamma_five_sixths_lower = parse_rational("1.127");
    in.pi_upper = rat(355, 113);
    in.gamma_ratio_bound = parse_rational("17.77");
    in.f1_bound = parse_rational("5.93");
    in.g_bound = rat(13, 100);
    in.tail_bound = rat(7, 500);
    in.phi_third_claim = parse_rational("0.84");
    return in;
}

namespace {

ExactRational json_rational(const nlohmann::json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return ExactRational(BigInt(v.get<long long>()));
    throw std::invalid_argument("certificate inputs: numbers must be integers or strings");
}

}  // namespace

CertificateInputs load_certificate_inputs(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open certificate inputs " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("certificate inputs: ") + e.what());
    }
    CertificateInputs c = CertificateInputs::defaults();
    auto list = [&](const char* key, std::vector<ExactRational>& dst) {
        if (!j.contains(key)) return;
        dst.clear();
        for (const auto& v : j.at(key)) dst.push_back(json_rational(v));
    };
    auto scalar = [&](const char* key, ExactRational& dst) {
        if (j.contains(key)) dst = json_rational(j.at(key));
    };
    list("n_coefficients", c.n_coefficients);
    list("n_prime_coefficients", c.n_prime_coefficients);
    scalar("g_at_zero", c.g_at_zero);
    scalar("g_at_third", c.g_at_third);
    scalar("delta", c.delta);
    scalar("gamma_third_upper", c.gamma_third_upper);
    scalar("gamma_five_sixths_lower", c.gamma_five_sixths_lower);
    scalar("pi_upper", c.pi_upper);
    scalar("gamma_ratio_bound", c.gamma_ratio_bound);
    scalar("f1_bound", c.f1_bound);
    scalar("g_bound", c.g_bound);
    scalar("tail_bound", c.tail_bound);
    scalar("phi_third_claim", c.phi_third_claim);
    return c;
}

bool CertificateReport::overall() const {
    return !clauses.empty() && std::all_of(clauses.begin(), clauses.end(), [](const auto& c) { return c.pass; });
}

std::string CertificateReport::to_json() const {
    nlohmann::ordered_json j;
    j["clauses"] = nlohmann::ordered_json::array();
    for (const auto& c : clauses) {
        nlohmann::ordered_json e;
        e["id"] = c.id;
        e["statement"] = c.statement;
        e["lhs"] = c.lhs;
        e["rhs"] = c.rhs;
        e["verdict"] = c.pass ? "pass" : "fail";
        if (!c.note.empty()) e["note"] = c.note;
        j["clauses"].push_back(e);
    }
    j["overall"] = overall() ? "pass" : "fail";
    return j.dump(2);
}

namespace {

std::string decimal(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

// a/b < c/d for positive denominators, stated as a*d < c*b.
CertificateClause cross_less(std::string id, std::string statement, const ExactRational& lhs, const ExactRational& rhs) {
    const BigInt l = numerator(lhs) * denominator(rhs);
    const BigInt r = numerator(rhs) * denominator(lhs);
    const std::string ls = numerator(lhs).str() + " x " + denominator(rhs).str() + " = " + l.str();
    const std::string rs = numerator(rhs).str() + " x " + denominator(lhs).str() + " = " + r.str();
    return {std::move(id), std::move(statement), ls, rs, l < r, ""};
}

}  // namespace

CertificateReport certify_phi_bound(const CertificateInputs& in) {
    CertificateReport rep;
    auto& out = rep.clauses;
    const ExactRational zero(0), third = rat(1, 3);
    const RationalPolynomial n_listed(in.n_coefficients);

    {
        const ExactRational g = g_exact(zero);
        out.push_back({"G0", "G(0) = 35/4096", to_string(g), to_string(in.g_at_zero), g == in.g_at_zero && g == rat(35, 4096), ""});
    }
    {
        const ExactRational g = g_exact(third);
        out.push_back({"G13", "G(1/3) = -2255905/17570592", to_string(g), to_string(in.g_at_third),
                       g == in.g_at_third && g == rat(-2255905, 17570592), ""});
    }
    {
        bool ok = true;
        std::string worst;
        for (const auto& a : {rat(0), rat(1, 10), rat(1, 5), rat(1, 4), rat(3, 10), rat(1, 3)}) {
            const bool same = g_common_denominator(a, n_listed) == g_exact(a) && g_from_integrals(a) == g_exact(a);
            if (!same && worst.empty()) worst = to_string(a);
            ok = ok && same;
        }
        out.push_back({"G_forms", "closed form, common-denominator form and moment assembly of G agree at alpha in {0,1/10,1/5,1/4,3/10,1/3}",
                       ok ? "all equal" : "mismatch at alpha=" + worst, "identical", ok, ""});
    }
    {
        const RationalPolynomial derived = n_polynomial_derived();
        const bool ok = derived == n_listed;
        std::string ds;
        for (const auto& c : derived.coefficients()) ds += (ds.empty() ? "" : ",") + to_string(c);
        std::string ls;
        for (const auto& c : n_listed.coefficients()) ls += (ls.empty() ? "" : ",") + to_string(c);
        out.push_back({"N_expansion", "listed N(alpha) equals the symbolic expansion of 2048 D(alpha) G(alpha) / (-15)", ls, ds, ok, ""});
    }
    {
        const RationalPolynomial np(in.n_prime_coefficients);
        const bool ok = np == n_listed.derivative();
        out.push_back({"Nprime_derivative", "listed N'(alpha) is the derivative of listed N(alpha)",
                       std::to_string(in.n_prime_coefficients.size()) + " coefficients", "d/dalpha N", ok, ""});
    }
    {
        ExactRational smallest = in.n_prime_coefficients.empty() ? ExactRational(0) : in.n_prime_coefficients.front();
        for (const auto& c : in.n_prime_coefficients) smallest = std::min(smallest, c);
        const bool ok = !in.n_prime_coefficients.empty() && smallest > 0;
        // The often quoted minimum 3228 is the smallest coefficient below the leading 315.
        ExactRational lower = smallest;
        if (in.n_prime_coefficients.size() > 1) {
            lower = in.n_prime_coefficients.front();
            for (std::size_t i = 0; i + 1 < in.n_prime_coefficients.size(); ++i) lower = std::min(lower, in.n_prime_coefficients[i]);
        }
        out.push_back({"Nprime_positive", "every coefficient of N' is positive", to_string(smallest), "0", ok,
                       "minimum over all coefficients " + to_string(smallest) + "; minimum below the leading term " +
                           to_string(lower)});
    }
    {
        const ExactRational g = g_exact(third);
        const ExactRational mag = g < 0 ? ExactRational(-g) : g;
        out.push_back(cross_less("G_bound", "|G(1/3)| < 13/100 by cross-multiplication", mag, in.g_bound));
    }
    const ExactRational gap_third = 30 - (third + 2) * (third + 3);
    const ExactRational tail = in.delta / gap_third;
    out.push_back(cross_less("tail_bound", "delta/(mu_5 - lambda(1/3)) = 27/2000 < 7/500", tail, in.tail_bound));
    {
        const ExactRational f2 = in.g_bound + in.tail_bound;
        out.push_back({"F2_bound", "F2 <= 13/100 + 7/500 = 72/500", to_string(f2), "72/500", f2 == rat(72, 500), ""});
    }
    {
        const ExactRational d0 = d_log_derivative(zero), d13 = d_log_derivative(third);
        const bool ok = d0 == rat(-7, 6) && d13 == rat(-549, 247);
        out.push_back({"DlogD_endpoints", "D'/D(0) = -7/6 and D'/D(1/3) = -549/247", to_string(d0) + " ; " + to_string(d13),
                       "-7/6 ; -549/247", ok, ""});
    }
    {
        bool ok = true;
        ExactRational prev = d_log_derivative(zero);
        constexpr int steps = 600;
        for (int i = 1; i <= steps; ++i) {
            const ExactRational cur = d_log_derivative(rat(i, 3 * steps));
            ok = ok && cur < prev && cur < 0;
            prev = cur;
        }
        out.push_back({"DlogD_monotone", "D'/D is negative and decreasing on [0,1/3]", "checked at 601 rational grid points",
                       "strictly decreasing", ok, "grid check only; not a rigorous monotonicity proof"});
    }
    {
        const ExactRational n0 = n_listed(zero);
        const ExactRational np0 = in.n_prime_coefficients.empty() ? ExactRational(0) : in.n_prime_coefficients.front();
        const ExactRational ratio = n0 == 0 ? ExactRational(0) : np0 / (n0 < 0 ? ExactRational(-n0) : n0);
        auto c = cross_less("domination", "N'(0)/|N(0)| = 18528/672 = 193/7 > 549/247 >= |D'/D|", rat(549, 247), ratio);
        c.pass = c.pass && ratio == rat(193, 7);
        out.push_back(c);
    }
    {
        const GammaEnclosure r = robbins_bounds(7.0 / 3.0);
        const double g13 = 9.0 / 4.0 * r.upper;
        const double bound = to_double(in.gamma_third_upper);
        out.push_back({"Robbins_gamma_third", "Gamma(1/3) = (9/4) Gamma(7/3) <= 2.680 via the Robbins upper bound", decimal(g13),
                       to_string(in.gamma_third_upper), g13 * (1.0 + 1e-12) <= bound,
                       "binary64 evaluation of the Robbins bound, 1e-12 relative margin"});
    }
    {
        const GammaEnclosure r = robbins_bounds(17.0 / 6.0);
        const double g56 = 36.0 / 55.0 * r.lower;
        const double bound = to_double(in.gamma_five_sixths_lower);
        out.push_back({"Robbins_gamma_five_sixths", "Gamma(5/6) = (36/55) Gamma(17/6) >= 1.127 via the Robbins lower bound",
                       decimal(g56), to_string(in.gamma_five_sixths_lower), g56 * (1.0 - 1e-12) >= bound,
                       "binary64 evaluation of the Robbins bound, 1e-12 relative margin"});
    }
    {
        const bool pi_ok = to_double(in.pi_upper) > kPi;
        const ExactRational ratio = in.pi_upper * in.gamma_third_upper * in.gamma_third_upper /
                                    (in.gamma_five_sixths_lower * in.gamma_five_sixths_lower);
        auto c = cross_less("gamma_ratio", "pi Gamma(1/3)^2 / Gamma(5/6)^2 <= (355/113) 2.680^2 / 1.127^2 < 17.77", ratio,
                            in.gamma_ratio_bound);
        c.pass = c.pass && pi_ok;
        c.note = "355/113 exceeds pi";
        out.push_back(c);
    }
    out.push_back(cross_less("F1_bound", "F1(1/3) <= (1/3) 17.77 < 5.93", in.gamma_ratio_bound / 3, in.f1_bound));
    {
        const ExactRational g = g_exact(third);
        const ExactRational f2_third = (g < 0 ? ExactRational(-g) : g) + tail;
        auto c = cross_less("F2_third", "|G(1/3)| + 27/2000 < 0.142", f2_third, parse_rational("0.142"));
        out.push_back(c);
    }
    out.push_back(cross_less("final_envelope", "5.93 x 72/500 < 6/7, i.e. 2988.72 < 3000", in.f1_bound * (in.g_bound + in.tail_bound),
                             rat(6, 7)));
    {
        const ExactRational chain = third * parse_rational("0.142") * in.gamma_ratio_bound;
        // The chain product is 0.84111..., quoted as 0.84 to two decimals; the conclusion drawn is Phi(1/3) < 1.
        const double rounded = std::round(to_double(chain) * 100.0) / 100.0;
        auto c = cross_less("phi_third_chain", "Phi(1/3) <= (1/3) 0.142 17.77 = 0.84 < 1", chain, ExactRational(1));
        c.pass = c.pass && std::fabs(rounded - to_double(in.phi_third_claim)) < 1e-12;
        c.note = "exact product " + decimal(to_double(chain)) + " rounds to " + to_string(in.phi_third_claim);
        out.push_back(c);
    }
    return rep;
}

}  // namespace blowup
