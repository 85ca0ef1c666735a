#include "blowup/kernels.hpp"

#include <cmath>

namespace blowup {

double kernel_kw(double sigma) {
    const double s = std::sin(sigma);
    return 3.0 * s * s * std::cos(sigma);
}

double kernel_kzz_angular(double sigma) {
    const double c = std::cos(sigma);
    return 3.0 * c * c - 1.0;
}

double nodal_angle() { return std::acos(1.0 / std::sqrt(3.0)); }

}  // namespace blowup
