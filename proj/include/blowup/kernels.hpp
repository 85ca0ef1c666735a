#pragma once

namespace blowup {

// Angular strain kernel 3 sin^2 cos.
double kernel_kw(double sigma);
// Angular factor 3 cos^2 - 1 of the axial pressure-Hessian kernel.
double kernel_kzz_angular(double sigma);
// arccos(1/sqrt 3), where the pressure factor vanishes and the strain kernel peaks.
double nodal_angle();

}  // namespace blowup
