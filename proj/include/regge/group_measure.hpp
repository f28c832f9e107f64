#pragma once

#include <complex>

#include "regge/quadrature.hpp"

namespace regge::measure {

using Complex = std::complex<double>;

// Rotation parameterized by r_a = phi_a sin(phi)/phi, restricted to the
// real section |r| <= 1.
struct RotationVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    [[nodiscard]] double norm() const;
};

// Single holomorphic factor of the connection-measure density,
// (1/sqrt(1-r^2) - 1) / (8 pi^2 r^2), evaluated cancellation-free so the
// r -> 0 limit 1/(16 pi^2) falls out exactly. Requires |r| < 1.
[[nodiscard]] double dr_density(const RotationVector& r);

// Integral of dr_density over the ball |r| <= 1, reduced to
// (1/2pi) Int_0^1 (1/sqrt(1-rho^2) - 1) drho and evaluated by quadrature
// after the rho = sin(theta) substitution removes the endpoint singularity.
[[nodiscard]] double measure_norm(const quad::QuadratureSpec& spec = {});

// (pi/2 - 1) / (2 pi), the closed form of the same integral.
[[nodiscard]] double measure_norm_analytic();

// 2 pi ln((1 + sqrt(1-z^2))/2), principal branches; requires z^2 != 1.
[[nodiscard]] Complex i_tilde_closed(Complex z);

// The same quantity from its one-dimensional integral reduction
// -2 pi Int_0^z (1/sqrt(1-rho^2) - 1) drho/rho, quadratured after
// rho = sin(theta) (integrand becomes tan(theta/2)). Requires 0 < z < 1.
[[nodiscard]] double i_tilde_quadrature(double z, const quad::QuadratureSpec& spec = {});

}  // namespace regge::measure
