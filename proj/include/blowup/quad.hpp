#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <type_traits>

namespace blowup {

struct QuadResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::size_t evaluations = 0;
};

struct QuadOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_level = 12;
};

class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Integrand signature used internally: f(x, x - a, b - x). The two distances are
// formed without cancellation, so integrands that blow up at b can use them directly.
using EndpointIntegrand = std::function<double(double, double, double)>;

QuadResult integrate_endpoint(const EndpointIntegrand& f, double a, double b, const QuadOptions& opt);

// Tanh-sinh quadrature on (a, b). It may take either (x) or
// (x, dist_to_a, dist_to_b); a plain f(x) is never called at a or b.
template <class F>
QuadResult integrate(F&& f, double a, double b, const QuadOptions& opt) {
    if constexpr (std::is_invocable_r_v<double, F&, double, double, double>) {
        return integrate_endpoint(EndpointIntegrand(std::ref(f)), a, b, opt);
    } else {
        // A plain f(x) cannot tell a rounded node from the endpoint itself, so such nodes are dropped.
        return integrate_endpoint(
            [&f, a, b](double x, double, double) { return (x > a && x < b) ? double(f(x)) : 0.0; }, a, b, opt);
    }
}

template <class F>
QuadResult integrate(F&& f, double a, double b, double tol) {
    QuadOptions opt;
    opt.abs_tol = tol;
    opt.rel_tol = tol;
    return integrate(std::forward<F>(f), a, b, opt);
}

// Convenience: just the value.
template <class F>
double quad_value(F&& f, double a, double b, double tol) {
    return integrate(std::forward<F>(f), a, b, tol).value;
}

}  // namespace blowup
