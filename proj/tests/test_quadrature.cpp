#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstring>
#include <limits>

#include "regge/quadrature.hpp"

using regge::quad::Complex;
using regge::quad::integrate;
using regge::quad::integrate_real;
using regge::quad::QuadratureError;
using regge::quad::QuadratureSpec;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }
}  // namespace

TEST_CASE("polynomials on finite intervals are exact to rounding") {
    CHECK(integrate_real([](double x) { return x * x; }, 0.0, 1.0) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    // [x^3 - x^2 + x/2] from -1 to 2: 5 - (-2.5).
    CHECK(integrate_real([](double x) { return 3.0 * x * x - 2.0 * x + 0.5; }, -1.0,
                         2.0) == doctest::Approx(7.5).epsilon(1e-14));
}

TEST_CASE("standard transcendental values") {
    CHECK(integrate_real([](double x) { return std::sin(x); }, 0.0, kPi) ==
          doctest::Approx(2.0).epsilon(1e-13));
    CHECK(integrate_real([](double x) { return std::exp(-x); }, 0.0, 3.0) ==
          doctest::Approx(1.0 - std::exp(-3.0)).epsilon(1e-13));
}

TEST_CASE("complex integrand integrates componentwise") {
    const auto r = integrate([](double x) { return std::exp(Complex{0.0, x}); }, 0.0,
                             1.0);
    CHECK(r.converged);
    CHECK(r.value.real() == doctest::Approx(std::sin(1.0)).epsilon(1e-13));
    CHECK(r.value.imag() == doctest::Approx(1.0 - std::cos(1.0)).epsilon(1e-13));
}

TEST_CASE("linearity and interval additivity") {
    const auto f = [](double x) { return std::cos(3.0 * x); };
    const auto g = [](double x) { return 1.0 / (1.0 + x * x); };
    const double lhs =
        integrate_real([&](double x) { return 2.0 * f(x) + 3.0 * g(x); }, 0.0, 2.0);
    const double rhs = 2.0 * integrate_real(f, 0.0, 2.0) + 3.0 * integrate_real(g, 0.0, 2.0);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));

    const double whole = integrate_real(g, 0.0, 2.0);
    const double split = integrate_real(g, 0.0, 0.7) + integrate_real(g, 0.7, 2.0);
    CHECK(whole == doctest::Approx(split).epsilon(1e-12));
}

TEST_CASE("semi-infinite ranges with exponential decay") {
    CHECK(integrate_real([](double x) { return std::exp(-x); }, 0.0, kInf) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(integrate_real([](double x) { return x * std::exp(-x * x); }, 0.0, kInf) ==
          doctest::Approx(0.5).epsilon(1e-12));
    // Oscillatory decaying tail.
    CHECK(integrate_real([](double x) { return std::exp(-x) * std::cos(x); }, 0.0,
                         kInf) == doctest::Approx(0.5).epsilon(1e-11));
    // Shifted lower endpoint.
    CHECK(integrate_real([](double x) { return std::exp(-(x - 2.0)); }, 2.0, kInf) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("identical inputs give bit-identical results") {
    const auto f = [](double x) { return std::exp(-x) * std::sin(7.0 * x); };
    const auto a = integrate(f, 0.0, kInf);
    const auto b = integrate(f, 0.0, kInf);
    CHECK(same_bits(a.value.real(), b.value.real()));
    CHECK(same_bits(a.value.imag(), b.value.imag()));
    CHECK(same_bits(a.err_estimate, b.err_estimate));
    CHECK(a.subdivisions == b.subdivisions);
}

TEST_CASE("converged result reports its error estimate") {
    const auto r = integrate([](double x) { return std::sin(x); }, 0.0, kPi);
    CHECK(r.converged);
    CHECK(r.subdivisions >= 1);
    CHECK(r.err_estimate < 1e-10);
    CHECK(std::abs(r.value.real() - 2.0) <= 10.0 * std::max(r.err_estimate, 1e-14));
}

TEST_CASE("budget exhaustion throws with the best estimate attached") {
    QuadratureSpec tight;
    tight.abs_tol = 1e-15;
    tight.rel_tol = 1e-15;
    tight.max_subdivisions = 8;
    const auto spiky = [](double x) {
        return x == 0.0 ? 0.0 : 1.0 / std::sqrt(x) + std::cos(50.0 / (x + 1e-3));
    };
    try {
        (void)integrate([&](double x) { return Complex{spiky(x), 0.0}; }, 0.0, 1.0,
                        tight);
        FAIL("expected QuadratureError");
    } catch (const QuadratureError& e) {
        CHECK(std::isfinite(e.best_estimate().real()));
        CHECK(e.error_bound() > 1e-15);
    }
}

TEST_CASE("invalid interval is rejected") {
    CHECK_THROWS_AS((void)integrate_real([](double x) { return x; }, 1.0, 0.0),
                    std::invalid_argument);
}
