#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "regge/quadrature.hpp"

namespace regge::moments {

using Complex = std::complex<double>;

// h(z) proportional to arcsin z (the genuine action) or to z (the
// linearized form relevant to the canonical measure).
enum class Variant { Arcsin, Linear };

// Provenance of a moment value.
enum class Route { SeriesUnrescaled, SeriesRescaled, IntegralRep, RadialQuadrature };

struct ModelParams {
    double gamma = 1.0;  // Barbero-Immirzi parameter, 0 < gamma < infinity
    Variant variant = Variant::Arcsin;
};

// Throws std::invalid_argument unless 0 < gamma < infinity.
void validate(const ModelParams& p);

struct MomentValue {
    unsigned l = 0;
    Complex value{0.0, 0.0};
    Route route = Route::SeriesRescaled;
};

// Moment of the monomial v^{2l}. Routes:
//   SeriesRescaled    pi (-1)^l (2/(1+i/gamma))^{2l+3} d^{2l+2}/dh^{2l+2} F(h)|_0
//                     with F = cos h ln((1+cos h)/2)   (Arcsin)
//                       or F = ln((1+sqrt(1-h^2))/2)   (Linear)
//   SeriesUnrescaled  pi (-1)^l (2 d/dh)^{2l+2} [2 z'(h) ln((1+sqrt(1-z^2))/2)]|_0
//                     with z = sin(h/(1+i/gamma)) (Arcsin) or h/(1+i/gamma) (Linear)
//   IntegralRep       Arcsin only: regular part 2 Int_0^inf lambda^{2l+3} /
//                     ((lambda^2+1) sinh(pi lambda)) dlambda plus the singular
//                     bracket (-1)^l (ln 4 - (2l+2)), same prefactor
//   RadialQuadrature  Linear only: the Bessel-kernel radial integral (see
//                     radial_moment_linear); Arcsin monomials are rejected
//                     because they are not admissible probes
[[nodiscard]] MomentValue moment_scalar(unsigned l, const ModelParams& p,
                                        Route route = Route::SeriesRescaled);

// Polynomial in x = v^2 with complex coefficients (coeffs[k] multiplies x^k).
struct ProbePolynomial {
    std::vector<Complex> coeffs;

    [[nodiscard]] Complex eval(Complex x) const;
    [[nodiscard]] Complex derivative(Complex x) const;
    // True iff value and first derivative vanish at the n = 1 singular point
    // x0 = 4 gamma^2/(gamma+i)^2. Always recomputed, never trusted.
    [[nodiscard]] bool admissible(const ModelParams& p) const;
};

// Linearity: sum of coeffs[k] * moment_scalar(k).
[[nodiscard]] Complex moment_of_polynomial(const ProbePolynomial& f, const ModelParams& p,
                                           Route route = Route::SeriesRescaled);

// Coefficients (a, b) of the singular part a f(x0) + b f'(x0) split off the
// moments; for the monomial x^l the reconstruction reads
//   moment = regular_moment_part(l) + a x0^l + b l x0^{l-1}.
// The Linear variant has an empty singular part at fixed finite l (zeros).
struct SingularCoefficients {
    Complex a{0.0, 0.0};
    Complex b{0.0, 0.0};
    Complex x0{0.0, 0.0};
};
[[nodiscard]] SingularCoefficients singular_coefficients(unsigned l, const ModelParams& p);

// pi (-1)^l (2/(1+i/gamma))^{2l+3} * 2 Int_0^inf lambda^{2l+3}/((lambda^2+1)
// sinh(pi lambda)) dlambda, the moment with the singular bracket removed.
[[nodiscard]] Complex regular_moment_part(unsigned l, const ModelParams& p,
                                          const quad::QuadratureSpec& spec = {});

// n = 1 singular point, computed as 4 gamma^2/(gamma+i)^2 (cancellation-free).
[[nodiscard]] Complex singular_point_x0(double gamma);

// 2^{-3} moment(l) conj(moment(m)), the scalar factorization identity.
[[nodiscard]] Complex factorized_moment(unsigned l, unsigned m, const ModelParams& p);

// Radial-functional oracle over real 3-vectors (Arcsin): with
// beta = (1/gamma - i)/2,
//   (i/2) 4 pi Int_0^inf (beta v)/((beta^2 v^2 + 1) sinh(pi beta v)) f(v^2) v^2 dv.
// The derivation holds only for admissible probes; inadmissible probes are
// rejected.
[[nodiscard]] Complex radial_moment(const ProbePolynomial& f, const ModelParams& p,
                                    const quad::QuadratureSpec& spec = {});

// Bessel-kernel radial oracle (Linear): the convention constant -i is fixed
// empirically at l = 0 (see README) and then held for all l, so
//   moment = -i * 4 pi Int_0^inf Ki1(beta v)/(2 pi beta v) v^{2l+2} dv.
[[nodiscard]] Complex radial_moment_linear(unsigned l, const ModelParams& p,
                                           const quad::QuadratureSpec& spec = {});

namespace detail {

// Series/integral routes parameterized by mu = i/gamma directly; replacing
// mu by its conjugate conjugates the value (used by the symmetry checks).
[[nodiscard]] Complex moment_mu(unsigned l, Complex mu, Variant variant, Route route,
                                std::size_t order);

// Radial functional without the admissibility gate, for the informational
// monomial-discrepancy check only.
[[nodiscard]] Complex radial_moment_unchecked(const ProbePolynomial& f,
                                              const ModelParams& p,
                                              const quad::QuadratureSpec& spec);

}  // namespace detail

}  // namespace regge::moments
