#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

namespace regge::quad {

using Complex = std::complex<double>;

struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 2000;
    // Fraction of the observed peak magnitude at which an infinite tail is
    // first truncated; the truncation is then extended until it settles.
    double tail_cut = 1e-18;
};

struct QuadratureResult {
    Complex value{0.0, 0.0};
    double err_estimate = 0.0;
    int subdivisions = 0;
    // False only when the panel budget ran out before the local error
    // criterion was met everywhere ("singular behavior" flag).
    bool converged = true;
};

class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, Complex best, double bound)
        : std::runtime_error(what), best_(best), bound_(bound) {}
    [[nodiscard]] Complex best_estimate() const noexcept { return best_; }
    [[nodiscard]] double error_bound() const noexcept { return bound_; }

private:
    Complex best_;
    double bound_;
};

using Integrand = std::function<Complex(double)>;

// Adaptive Gauss-Kronrod (G7/K15) bisection on [a, b]. Pass b = +infinity
// for a semi-infinite range: the tail is truncated where |f| falls below
// tail_cut of the peak magnitude seen so far, then extended until two
// successive extensions change the value by less than abs_tol.
// Deterministic: identical inputs give bit-identical results.
// Throws QuadratureError (carrying the best estimate and its error bound)
// when the subdivision budget is exhausted without convergence.
[[nodiscard]] QuadratureResult integrate(const Integrand& f, double a, double b,
                                         const QuadratureSpec& spec = {});

[[nodiscard]] double integrate_real(const std::function<double(double)>& f, double a,
                                    double b, const QuadratureSpec& spec = {});

}  // namespace regge::quad
