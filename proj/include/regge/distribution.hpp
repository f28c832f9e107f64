#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "regge/moments.hpp"
#include "regge/quadrature.hpp"

namespace regge::dist {

using Complex = std::complex<double>;
using moments::Variant;

// Squared complexified area. The physical region is real vsq: positive
// timelike, negative spacelike, |A| = sqrt(|vsq|).
struct AreaSquared {
    Complex vsq{0.0, 0.0};
    [[nodiscard]] double area_abs() const;
    [[nodiscard]] bool physical() const;
};

// Pole of the reconstructed density at 4 n^2 (1+i/gamma)^{-2}; order 2 at
// n = 1 (rational factor and first sinh zero coincide), 1 for n >= 2.
struct SingularPoint {
    unsigned n = 0;
    Complex location{0.0, 0.0};
    int order = 0;
};

struct DistributionSample {
    double vsq = 0.0;
    double n_value = 0.0;
    double scaled = 0.0;  // (2 pi)^2 n_value
};

enum class Region { Spacelike, Timelike };

class SingularPointError : public std::domain_error {
public:
    SingularPointError(unsigned n, Complex location)
        : std::domain_error("distribution: evaluation point is on a singular point"),
          n_(n),
          location_(location) {}
    [[nodiscard]] unsigned n() const noexcept { return n_; }
    [[nodiscard]] Complex location() const noexcept { return location_; }

private:
    unsigned n_;
    Complex location_;
};

class DivergenceError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// w = sqrt((1/gamma - i)^2 vsq) with Re w >= 0; ties (Re w = 0) resolved
// toward Im w >= 0.
[[nodiscard]] Complex branch_w(Complex vsq, double gamma);

// |(w/4) / ((w^2/4 + 1) sinh(pi w/2))|^2; even in w, finite on the real
// axis, (2 pi)^2 * value -> 1 as vsq -> 0. Throws SingularPointError within
// 1e-9 relative distance of a singular point (possible only off the real
// axis).
[[nodiscard]] double distribution_arcsin(Complex vsq, double gamma);

// |Ki1(w/2) / (2 pi w/2)|^2; diverges (integrably) at vsq = 0, which throws
// DivergenceError.
[[nodiscard]] double distribution_linear(Complex vsq, double gamma);

// Real-axis dispatch over the variant.
[[nodiscard]] double distribution(double vsq, double gamma, Variant variant);

// ln((2 pi)^2 N), evaluated through scaled exponentials so it stays finite
// where N itself would underflow (decay fits reach N ~ e^{-pi 60}).
[[nodiscard]] double log_scaled_distribution(double vsq, double gamma, Variant variant);

// Modified integral Bessel function, definition of record:
// Ki1(x) = Int_0^inf exp(-x cosh t)/cosh t dt, Re x > 0.
[[nodiscard]] Complex ki1(Complex x);
// e^x Ki1(x): no underflow for large Re x.
[[nodiscard]] Complex ki1_scaled(Complex x);
// Dual representation Int_x^inf K0(u) du along the constant-phase ray
// u = x s, used as an independent oracle.
[[nodiscard]] Complex ki1_via_k0(Complex x);

[[nodiscard]] std::vector<SingularPoint> singular_points(double gamma, unsigned n_max);

// Interior local maxima of the distribution on real vsq in [vsq_lo, vsq_hi]:
// grid scan plus golden-section refinement to 1e-8 in the abscissa.
[[nodiscard]] std::vector<double> local_maxima(double gamma, double vsq_lo,
                                               double vsq_hi, Variant variant,
                                               int grid_points = 4001);

struct DecayFit {
    double fitted_rate = 0.0;
    double theoretical_rate = 0.0;
    double window_lo = 0.0;
    double window_hi = 0.0;
    bool window_shrunk = false;
};

// Least-squares decay rate of -ln N over |A| in [abs_lo, abs_hi]: the
// coefficient s of the fit s|A| + p ln|A| + c + d/|A| (the subleading terms
// absorb the known power-law prefactors; see README). Theoretical rates are
// pi and pi/gamma (Arcsin), 1 and 1/gamma (Linear), spacelike/timelike.
// Points where N < 1e-300 are dropped and the window shrinks (reported).
[[nodiscard]] DecayFit decay_rate(double gamma, Region region, Variant variant,
                                  double abs_lo = 10.0, double abs_hi = 30.0);

// Uniform grid sweep; the linear variant's vsq = 0 divergence surfaces as NaN.
[[nodiscard]] std::vector<DistributionSample> sample_distribution(double gamma,
                                                                  Variant variant,
                                                                  double vsq_lo,
                                                                  double vsq_hi,
                                                                  int samples);

namespace detail {

// Distribution value from an explicit branch w; exposed so tests can assert
// bit-level evenness under w -> -w.
[[nodiscard]] double arcsin_from_w(Complex w);
[[nodiscard]] double linear_from_w(Complex w);

}  // namespace detail

}  // namespace regge::dist
