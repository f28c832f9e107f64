#include "regge/group_measure.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace regge::measure {

namespace {
constexpr double kPi = std::numbers::pi;
}

double RotationVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

double dr_density(const RotationVector& r) {
    const double s = r.x * r.x + r.y * r.y + r.z * r.z;
    if (s >= 1.0) throw std::domain_error("dr_density: requires |r| < 1");
    // (1/sqrt(1-s) - 1)/s  ==  1/(sqrt(1-s) (1 + sqrt(1-s))), exactly.
    const double root = std::sqrt(1.0 - s);
    return 1.0 / (8.0 * kPi * kPi * root * (1.0 + root));
}

double measure_norm(const quad::QuadratureSpec& spec) {
    const double integral = quad::integrate_real(
        [](double theta) { return 1.0 - std::cos(theta); }, 0.0, kPi / 2.0, spec);
    return integral / (2.0 * kPi);
}

double measure_norm_analytic() { return (kPi / 2.0 - 1.0) / (2.0 * kPi); }

Complex i_tilde_closed(Complex z) {
    const Complex zsq = z * z;
    if (zsq == Complex{1.0, 0.0})
        throw std::domain_error("i_tilde_closed: undefined at z^2 = 1");
    return 2.0 * kPi * std::log((1.0 + std::sqrt(Complex{1.0, 0.0} - zsq)) / 2.0);
}

double i_tilde_quadrature(double z, const quad::QuadratureSpec& spec) {
    if (!(z > 0.0 && z < 1.0))
        throw std::domain_error("i_tilde_quadrature: requires 0 < z < 1");
    // (1 - cos(theta))/sin(theta) == tan(theta/2).
    const double upper = std::asin(z);
    const double integral = quad::integrate_real(
        [](double theta) { return std::tan(0.5 * theta); }, 0.0, upper, spec);
    return -2.0 * kPi * integral;
}

}  // namespace regge::measure
