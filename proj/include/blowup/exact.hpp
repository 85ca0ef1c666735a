#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace blowup {

// Arbitrary-precision rational, always in lowest terms with a positive denominator.
using ExactRational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

ExactRational rat(long long num, long long den = 1);
// Accepts "p/q", an integer, or a finite decimal such as "0.25" or "-1.5e-3".
ExactRational parse_rational(const std::string& text);
std::string to_string(const ExactRational& q);
double to_double(const ExactRational& q);

class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<ExactRational> ascending);

    static RationalPolynomial constant(const ExactRational& c);
    static RationalPolynomial monomial(const ExactRational& c, std::size_t degree);
    // c0 + c1 alpha
    static RationalPolynomial linear(const ExactRational& c0, const ExactRational& c1);

    const std::vector<ExactRational>& coefficients() const { return c_; }
    int degree() const { return c_.empty() ? -1 : int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    ExactRational operator()(const ExactRational& x) const;
    RationalPolynomial derivative() const;

    friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator*(const ExactRational& s, const RationalPolynomial& a);
    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) { return a.c_ == b.c_; }

    // Exact long division; throws if the remainder is nonzero.
    RationalPolynomial divide_exact(const RationalPolynomial& d) const;
    RationalPolynomial pow(unsigned e) const;

private:
    void trim();
    std::vector<ExactRational> c_;
};

class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

ExactRational hat_a1(const ExactRational& alpha);
ExactRational hat_a3(const ExactRational& alpha);

// G(alpha) from its closed two-mode formula.
ExactRational g_exact(const ExactRational& alpha);
// G(alpha) = -15 N(alpha) / (2048 (1-alpha)^2 (alpha+4)^2 (alpha+6)^2).
ExactRational g_common_denominator(const ExactRational& alpha);
ExactRational g_common_denominator(const ExactRational& alpha, const RationalPolynomial& n_poly);
// G(alpha) assembled from first principles: the quadratic form expanded in x^2 and
// integrated against the J_j moments, plus the coupling through I_k / B1.
ExactRational g_from_integrals(const ExactRational& alpha);

// J_j = int_0^1 (1 - 3x^2) x^{2j} dx.
ExactRational j_moment(int j);
// I_k / B1 with I_k = int_0^1 x^{2k-alpha} (1-x^2)^{(1+alpha)/2} dx.
ExactRational i_moment_over_b1(int k, const ExactRational& alpha);

// The N polynomial as printed (ascending coefficients).
RationalPolynomial n_polynomial_listed();
// N rebuilt by expanding 2048 D G / (-15) symbolically.
RationalPolynomial n_polynomial_derived();
// The nine listed coefficients of N'.
std::vector<ExactRational> n_prime_coefficients();

// D(alpha) = (1-alpha)^2 (alpha+4)^2 (alpha+6)^2 and its log-derivative.
ExactRational d_log_derivative(const ExactRational& alpha);

struct CertificateInputs {
    std::vector<ExactRational> n_coefficients;        // ascending, as listed
    std::vector<ExactRational> n_prime_coefficients;  // ascending, as listed
    ExactRational g_at_zero;
    ExactRational g_at_third;
    ExactRational delta;          // tail constant 3/10
    ExactRational gamma_third_upper;   // 2.680
    ExactRational gamma_five_sixths_lower;  // 1.127
    ExactRational pi_upper;       // 355/113
    ExactRational gamma_ratio_bound;  // 17.77
    ExactRational f1_bound;       // 5.93
    ExactRational g_bound;        // 13/100
    ExactRational tail_bound;     // 7/500
    ExactRational phi_third_claim;  // 0.84

    static CertificateInputs defaults();
};

// Reads overrides for the fields above from a JSON file; missing keys keep their defaults.
CertificateInputs load_certificate_inputs(const std::string& path);

struct CertificateClause {
    std::string id;
    std::string statement;
    std::string lhs;
    std::string rhs;
    bool pass;
    std::string note;
};

struct CertificateReport {
    std::vector<CertificateClause> clauses;
    bool overall() const;
    std::string to_json() const;
};

CertificateReport certify_phi_bound(const CertificateInputs& in = CertificateInputs::defaults());

}  // namespace blowup
