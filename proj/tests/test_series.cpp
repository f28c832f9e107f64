#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "regge/series.hpp"

using namespace regge::series;

namespace {

// Sum of the truncated series at a point, Horner form.
Complex eval(const TruncatedSeries& s, Complex h) {
    Complex acc{0.0, 0.0};
    for (std::size_t k = s.order() + 1; k-- > 0;) acc = acc * h + s.coeff(k);
    return acc;
}

}  // namespace

TEST_CASE("(1+h)(1-h) = 1 - h^2 with an exactly zero cross term") {
    const auto a = TruncatedSeries::from_coeffs({{1.0, 0.0}, {1.0, 0.0}});
    const auto b = TruncatedSeries::from_coeffs({{1.0, 0.0}, {-1.0, 0.0}});
    const auto p = a * b;
    CHECK(p.order() == 1);  // truncation at the smaller operand order
    CHECK(p.coeff(0) == Complex{1.0, 0.0});
    CHECK(std::abs(p.coeff(1)) == 0.0);

    // With enough headroom the quadratic term appears.
    const auto a3 = TruncatedSeries::from_coeffs(
        {{1.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}});
    const auto b3 = TruncatedSeries::from_coeffs(
        {{1.0, 0.0}, {-1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}});
    const auto p3 = a3 * b3;
    CHECK(p3.coeff(2) == Complex{-1.0, 0.0});
    CHECK(std::abs(p3.coeff(1)) == 0.0);
    CHECK(std::abs(p3.coeff(3)) == 0.0);
}

TEST_CASE("sin * cos matches sin(2h)/2 coefficientwise") {
    const std::size_t k = 11;
    const auto lhs = elementary_series(Elementary::Sin, k) *
                     elementary_series(Elementary::Cos, k);
    const auto rhs = scale(
        scale_argument(elementary_series(Elementary::Sin, k), Complex{2.0, 0.0}),
        Complex{0.5, 0.0});
    for (std::size_t i = 0; i <= k; ++i)
        CHECK(std::abs(lhs.coeff(i) - rhs.coeff(i)) <= 1e-15);
}

TEST_CASE("elementary coefficient spot values") {
    const auto sq = elementary_series(Elementary::Sqrt1m, 2);
    CHECK(sq.coeff(0) == Complex{1.0, 0.0});
    CHECK(sq.coeff(1) == Complex{-0.5, 0.0});
    CHECK(sq.coeff(2) == Complex{-0.125, 0.0});

    const auto as = elementary_series(Elementary::Arcsin, 5);
    CHECK(std::abs(as.coeff(0)) == 0.0);
    CHECK(as.coeff(1) == Complex{1.0, 0.0});
    CHECK(std::abs(as.coeff(2)) == 0.0);
    CHECK(as.coeff(3).real() == doctest::Approx(1.0 / 6.0).epsilon(1e-16));
    CHECK(as.coeff(5).real() == doctest::Approx(3.0 / 40.0).epsilon(1e-16));

    const auto ln = elementary_series(Elementary::Ln1p, 4);
    CHECK(std::abs(ln.coeff(0)) == 0.0);
    CHECK(ln.coeff(1) == Complex{1.0, 0.0});
    CHECK(ln.coeff(2) == Complex{-0.5, 0.0});
    CHECK(ln.coeff(3).real() == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
    CHECK(ln.coeff(4) == Complex{-0.25, 0.0});
}

TEST_CASE("compose: sin(arcsin h) is the identity series") {
    const std::size_t k = 13;
    const auto s = compose(elementary_series(Elementary::Sin, k),
                           elementary_series(Elementary::Arcsin, k));
    CHECK(std::abs(s.coeff(0)) <= 1e-16);
    CHECK(s.coeff(1).real() == doctest::Approx(1.0).epsilon(1e-14));
    for (std::size_t i = 2; i <= k; ++i) CHECK(std::abs(s.coeff(i)) <= 1e-13);
}

TEST_CASE("compose: ln(1 + (sqrt(1-h) - 1)) = -sum h^k/(2k)") {
    const std::size_t k = 12;
    auto inner = elementary_series(Elementary::Sqrt1m, k);
    inner.set_coeff(0, Complex{0.0, 0.0});  // sqrt(1-h) - 1 has zero constant term
    const auto s = compose(elementary_series(Elementary::Ln1p, k), inner);
    for (std::size_t i = 1; i <= k; ++i) {
        CHECK(s.coeff(i).real() ==
              doctest::Approx(-0.5 / static_cast<double>(i)).epsilon(1e-12));
        CHECK(std::abs(s.coeff(i).imag()) <= 1e-15);
    }
}

TEST_CASE("compose: sqrt(1 - (2h - h^2)) = 1 - h exactly in value") {
    const std::size_t k = 14;
    const auto inner = TruncatedSeries::from_coeffs([] {
        std::vector<Complex> c(15, Complex{0.0, 0.0});
        c[1] = Complex{2.0, 0.0};
        c[2] = Complex{-1.0, 0.0};
        return c;
    }());
    const auto s = compose(elementary_series(Elementary::Sqrt1m, k), inner);
    CHECK(s.coeff(0).real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(s.coeff(1).real() == doctest::Approx(-1.0).epsilon(1e-13));
    for (std::size_t i = 2; i <= k; ++i) CHECK(std::abs(s.coeff(i)) <= 1e-11);
}

TEST_CASE("truncated evaluation tracks the analytic function") {
    const auto sin14 = elementary_series(Elementary::Sin, 14);
    const Complex h{0.1, 0.0};
    CHECK(std::abs(eval(sin14, h) - Complex{std::sin(0.1), 0.0}) <= 1e-15);
    const auto cos14 = elementary_series(Elementary::Cos, 14);
    CHECK(std::abs(eval(cos14, h) - Complex{std::cos(0.1), 0.0}) <= 1e-15);
}

TEST_CASE("derivative shifts coefficients") {
    const auto d = derivative(elementary_series(Elementary::Sin, 9));
    const auto cos8 = elementary_series(Elementary::Cos, 8);
    CHECK(d.order() == 8);
    for (std::size_t i = 0; i <= 8; ++i)
        CHECK(std::abs(d.coeff(i) - cos8.coeff(i)) <= 1e-16);
}

TEST_CASE("derivative_at_zero recovers k! scaling") {
    const auto sin9 = elementary_series(Elementary::Sin, 9);
    CHECK(derivative_at_zero(sin9, 1).real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(derivative_at_zero(sin9, 3).real() == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(derivative_at_zero(sin9, 7).real() == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(std::abs(derivative_at_zero(sin9, 4)) == 0.0);
}

TEST_CASE("structural parity: even times even keeps odd slots exactly zero") {
    const auto even = TruncatedSeries::from_coeffs(
        {{0.3, -0.1}, {0.0, 0.0}, {-1.2, 0.4}, {0.0, 0.0}, {0.7, 0.9}});
    const auto p = even * even;
    for (std::size_t i = 1; i <= p.order(); i += 2) CHECK(std::abs(p.coeff(i)) == 0.0);
}

TEST_CASE("multiplication associativity to rounding") {
    const auto a = elementary_series(Elementary::Sin, 10);
    const auto b = elementary_series(Elementary::Cos, 10);
    const auto c = elementary_series(Elementary::Ln1p, 10);
    const auto l = (a * b) * c;
    const auto r = a * (b * c);
    for (std::size_t i = 0; i <= 10; ++i)
        CHECK(std::abs(l.coeff(i) - r.coeff(i)) <= 1e-13);
}

TEST_CASE("argument scaling multiplies coefficient k by alpha^k") {
    const auto s = scale_argument(elementary_series(Elementary::Sin, 7),
                                  Complex{2.0, 0.0});
    CHECK(s.coeff(1).real() == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(s.coeff(3).real() == doctest::Approx(-8.0 / 6.0).epsilon(1e-14));
    CHECK(s.coeff(5).real() == doctest::Approx(32.0 / 120.0).epsilon(1e-14));
    // Complex alpha keeps conjugation equivariance.
    const Complex alpha{0.3, 0.7};
    const auto sc = scale_argument(elementary_series(Elementary::Sin, 7), alpha);
    const auto scc =
        scale_argument(elementary_series(Elementary::Sin, 7), std::conj(alpha));
    for (std::size_t i = 0; i <= 7; ++i)
        CHECK(std::abs(std::conj(sc.coeff(i)) - scc.coeff(i)) == 0.0);
}

TEST_CASE("order bookkeeping and hard errors") {
    const auto s = elementary_series(Elementary::Cos, 5);
    CHECK(s.order() == 5);
    CHECK_THROWS_AS((void)s.coeff(6), InsufficientOrderError);
    CHECK_THROWS_AS((void)derivative_at_zero(s, 6), InsufficientOrderError);
    CHECK_THROWS_AS((void)TruncatedSeries::from_coeffs({}), std::invalid_argument);
    // Composition requires an exactly zero inner constant term.
    const auto g = TruncatedSeries::from_coeffs({{1e-30, 0.0}, {1.0, 0.0}});
    CHECK_THROWS_AS((void)compose(s, g), std::invalid_argument);
}

TEST_CASE("add and sub are coefficientwise with min-order truncation") {
    const auto a = TruncatedSeries::from_coeffs({{1.0, 2.0}, {3.0, -4.0}, {5.0, 6.0}});
    const auto b = TruncatedSeries::from_coeffs({{0.5, -1.0}, {2.0, 2.0}});
    const auto s = a + b;
    CHECK(s.order() == 1);
    CHECK(s.coeff(0) == Complex{1.5, 1.0});
    CHECK(s.coeff(1) == Complex{5.0, -2.0});
    const auto d = a - b;
    CHECK(d.coeff(0) == Complex{0.5, 3.0});
    CHECK(d.coeff(1) == Complex{1.0, -6.0});
}
