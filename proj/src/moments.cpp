#include "regge/moments.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "regge/distribution.hpp"
#include "regge/series.hpp"

namespace regge::moments {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kOne{1.0, 0.0};

// Empirically fixed at l = 0 against the rescaled series, then held for
// every l; documented in the README conventions section.
constexpr Complex kLinearRadialConvention{0.0, -1.0};

using series::Elementary;
using series::TruncatedSeries;

Complex pow_int(Complex base, unsigned n) {
    Complex r{1.0, 0.0};
    for (unsigned i = 0; i < n; ++i) r *= base;
    return r;
}

double parity_sign(unsigned l) { return (l % 2 == 0) ? 1.0 : -1.0; }

// cos h * ln((1+cos h)/2)
TruncatedSeries rescaled_generator_arcsin(std::size_t order) {
    const TruncatedSeries cos = series::elementary_series(Elementary::Cos, order);
    const TruncatedSeries u =
        series::scale(cos - TruncatedSeries::constant(kOne, order), 0.5);
    return cos * series::compose(series::elementary_series(Elementary::Ln1p, order), u);
}

// ln((1+sqrt(1-h^2))/2)
TruncatedSeries rescaled_generator_linear(std::size_t order) {
    TruncatedSeries h2(order);
    if (order >= 2) h2.set_coeff(2, kOne);
    const TruncatedSeries root =
        series::compose(series::elementary_series(Elementary::Sqrt1m, order), h2);
    const TruncatedSeries u =
        series::scale(root - TruncatedSeries::constant(kOne, order), 0.5);
    return series::compose(series::elementary_series(Elementary::Ln1p, order), u);
}

Complex beta_of(double gamma) { return Complex{0.5 / gamma, -0.5}; }

}  // namespace

void validate(const ModelParams& p) {
    if (!(p.gamma > 0.0) || std::isinf(p.gamma) || std::isnan(p.gamma))
        throw std::invalid_argument("ModelParams: requires 0 < gamma < infinity");
}

Complex singular_point_x0(double gamma) {
    const Complex g{gamma, 0.0};
    return 4.0 * g * g / ((g + Complex{0.0, 1.0}) * (g + Complex{0.0, 1.0}));
}

namespace detail {

Complex moment_mu(unsigned l, Complex mu, Variant variant, Route route,
                  std::size_t order) {
    const std::size_t k = 2 * static_cast<std::size_t>(l) + 2;
    if (order < k + 1) order = k + 1;
    const Complex q = 2.0 / (kOne + mu);

    switch (route) {
        case Route::SeriesRescaled: {
            const TruncatedSeries gen = variant == Variant::Arcsin
                                            ? rescaled_generator_arcsin(order)
                                            : rescaled_generator_linear(order);
            return kPi * parity_sign(l) * pow_int(q, 2 * l + 3) *
                   series::derivative_at_zero(gen, k);
        }
        case Route::SeriesUnrescaled: {
            const Complex alpha = kOne / (kOne + mu);
            const TruncatedSeries z =
                variant == Variant::Arcsin
                    ? series::scale_argument(
                          series::elementary_series(Elementary::Sin, order), alpha)
                    : series::scale(TruncatedSeries::identity(order), alpha);
            const TruncatedSeries root = series::compose(
                series::elementary_series(Elementary::Sqrt1m, order), z * z);
            const TruncatedSeries logpart = series::compose(
                series::elementary_series(Elementary::Ln1p, order),
                series::scale(root - TruncatedSeries::constant(kOne, order), 0.5));
            const TruncatedSeries inner =
                series::scale(series::derivative(z) * logpart, 2.0);
            return kPi * parity_sign(l) * std::ldexp(1.0, static_cast<int>(k)) *
                   series::derivative_at_zero(inner, k);
        }
        case Route::IntegralRep: {
            if (variant != Variant::Arcsin)
                throw std::invalid_argument(
                    "moment_scalar: the integral-representation route exists only for "
                    "the arcsin variant");
            const unsigned power = 2 * l + 3;
            const quad::QuadratureResult integral = quad::integrate(
                [power](double lam) {
                    double num = 1.0;
                    for (unsigned i = 0; i < power; ++i) num *= lam;
                    return Complex{num / ((lam * lam + 1.0) * std::sinh(kPi * lam)),
                                   0.0};
                },
                0.0, std::numeric_limits<double>::infinity());
            const double bracket_sing =
                parity_sign(l) * (std::log(4.0) - static_cast<double>(2 * l + 2));
            return kPi * parity_sign(l) * pow_int(q, 2 * l + 3) *
                   (2.0 * integral.value.real() + bracket_sing);
        }
        case Route::RadialQuadrature: {
            if (variant != Variant::Linear)
                throw std::invalid_argument(
                    "moment_scalar: monomial probes are not admissible for the arcsin "
                    "radial functional (they violate f(4(1 + i/gamma)^-2) = 0); use "
                    "radial_moment with an admissible polynomial instead");
            // mu = i/gamma on the physical sheet, so gamma = 1/Im(mu).
            if (!(mu.imag() > 0.0))
                throw std::invalid_argument(
                    "moment_mu: the radial route needs Im(mu) > 0");
            ModelParams p{1.0 / mu.imag(), Variant::Linear};
            return radial_moment_linear(l, p);
        }
    }
    throw std::logic_error("moment_mu: unreachable route");
}

Complex radial_moment_unchecked(const ProbePolynomial& f, const ModelParams& p,
                                const quad::QuadratureSpec& spec) {
    const Complex beta = beta_of(p.gamma);
    const quad::QuadratureResult r = quad::integrate(
        [&f, beta](double v) {
            const Complex bv = beta * v;
            return bv / ((bv * bv + kOne) * std::sinh(kPi * bv)) * f.eval(v * v) *
                   (v * v);
        },
        0.0, std::numeric_limits<double>::infinity(), spec);
    return Complex{0.0, 0.5} * 4.0 * kPi * r.value;
}

}  // namespace detail

MomentValue moment_scalar(unsigned l, const ModelParams& p, Route route) {
    validate(p);
    const Complex mu{0.0, 1.0 / p.gamma};
    const std::size_t order = 2 * static_cast<std::size_t>(l) + 6;
    return MomentValue{l, detail::moment_mu(l, mu, p.variant, route, order), route};
}

Complex ProbePolynomial::eval(Complex x) const {
    Complex acc{0.0, 0.0};
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
    return acc;
}

Complex ProbePolynomial::derivative(Complex x) const {
    Complex acc{0.0, 0.0};
    for (std::size_t k = coeffs.size(); k-- > 1;)
        acc = acc * x + static_cast<double>(k) * coeffs[k];
    return acc;
}

bool ProbePolynomial::admissible(const ModelParams& p) const {
    validate(p);
    const Complex x0 = singular_point_x0(p.gamma);
    const double base = std::max(1.0, std::abs(x0));
    double scale = 0.0;
    double xk = 1.0;
    for (const Complex& c : coeffs) {
        scale += std::abs(c) * xk;
        xk *= base;
    }
    if (scale == 0.0) return true;  // the zero polynomial
    const double tol = 1e-9 * scale;
    return std::abs(eval(x0)) <= tol && std::abs(derivative(x0)) <= tol;
}

Complex moment_of_polynomial(const ProbePolynomial& f, const ModelParams& p,
                             Route route) {
    validate(p);
    Complex acc{0.0, 0.0};
    for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
        if (f.coeffs[k] == Complex{0.0, 0.0}) continue;
        acc += f.coeffs[k] * moment_scalar(static_cast<unsigned>(k), p, route).value;
    }
    return acc;
}

SingularCoefficients singular_coefficients(unsigned /*l*/, const ModelParams& p) {
    validate(p);
    SingularCoefficients out;
    out.x0 = singular_point_x0(p.gamma);
    if (p.variant == Variant::Linear) return out;  // empty singular part
    const Complex mu{0.0, 1.0 / p.gamma};
    const Complex q3 = pow_int(2.0 / (kOne + mu), 3);
    out.a = kPi * q3 * (std::log(4.0) - 2.0);
    out.b = -2.0 * kPi * q3 * out.x0;
    return out;
}

Complex regular_moment_part(unsigned l, const ModelParams& p,
                            const quad::QuadratureSpec& spec) {
    validate(p);
    if (p.variant != Variant::Arcsin)
        throw std::invalid_argument(
            "regular_moment_part: defined for the arcsin variant only");
    const unsigned power = 2 * l + 3;
    const quad::QuadratureResult integral = quad::integrate(
        [power](double lam) {
            double num = 1.0;
            for (unsigned i = 0; i < power; ++i) num *= lam;
            return Complex{num / ((lam * lam + 1.0) * std::sinh(kPi * lam)), 0.0};
        },
        0.0, std::numeric_limits<double>::infinity(), spec);
    const Complex mu{0.0, 1.0 / p.gamma};
    return kPi * parity_sign(l) * pow_int(2.0 / (kOne + mu), 2 * l + 3) * 2.0 *
           integral.value.real();
}

Complex factorized_moment(unsigned l, unsigned m, const ModelParams& p) {
    const Complex ml = moment_scalar(l, p).value;
    const Complex mm = moment_scalar(m, p).value;
    return 0.125 * ml * std::conj(mm);
}

Complex radial_moment(const ProbePolynomial& f, const ModelParams& p,
                      const quad::QuadratureSpec& spec) {
    validate(p);
    if (p.variant != Variant::Arcsin)
        throw std::invalid_argument(
            "radial_moment: the sinh-kernel radial functional belongs to the arcsin "
            "variant; use radial_moment_linear for the linear variant");
    if (!f.admissible(p))
        throw std::invalid_argument(
            "radial_moment: inadmissible probe; the contour argument requires "
            "f(4(1 + i/gamma)^-2) = 0 and f'(4(1 + i/gamma)^-2) = 0");
    return detail::radial_moment_unchecked(f, p, spec);
}

Complex radial_moment_linear(unsigned l, const ModelParams& p,
                             const quad::QuadratureSpec& spec) {
    validate(p);
    const Complex beta = beta_of(p.gamma);
    const unsigned power = 2 * l + 2;
    const quad::QuadratureResult r = quad::integrate(
        [beta, power](double v) {
            if (v == 0.0) return Complex{0.0, 0.0};
            double vp = 1.0;
            for (unsigned i = 0; i < power; ++i) vp *= v;
            const Complex bv = beta * v;
            return dist::ki1(bv) / (2.0 * kPi * bv) * vp;
        },
        0.0, std::numeric_limits<double>::infinity(), spec);
    return kLinearRadialConvention * 4.0 * kPi * r.value;
}

}  // namespace regge::moments
