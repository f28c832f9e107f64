#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace regge::series {

using Complex = std::complex<double>;

// Requesting a derivative beyond the stored order. A silent zero here would
// corrupt every downstream moment, so this is always a hard error.
class InsufficientOrderError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Formal power series in one variable truncated at a fixed order K.
// Coefficients are Taylor coefficients (already divided by factorials),
// which keeps magnitudes tame for orders up to ~40. Arithmetic between two
// series truncates to the smaller order, never silently extends.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order) : c_(order + 1, Complex{0.0, 0.0}) {}

    [[nodiscard]] static TruncatedSeries constant(Complex value, std::size_t order) {
        TruncatedSeries s(order);
        s.c_[0] = value;
        return s;
    }

    // The series "h" itself.
    [[nodiscard]] static TruncatedSeries identity(std::size_t order) {
        TruncatedSeries s(order);
        if (order >= 1) s.c_[1] = Complex{1.0, 0.0};
        return s;
    }

    [[nodiscard]] static TruncatedSeries from_coeffs(std::vector<Complex> coeffs) {
        if (coeffs.empty()) throw std::invalid_argument("series: empty coefficient list");
        TruncatedSeries s(coeffs.size() - 1);
        s.c_ = std::move(coeffs);
        return s;
    }

    [[nodiscard]] std::size_t order() const noexcept { return c_.size() - 1; }

    [[nodiscard]] Complex coeff(std::size_t k) const {
        if (k >= c_.size())
            throw InsufficientOrderError("series: coefficient index exceeds truncation order");
        return c_[k];
    }

    void set_coeff(std::size_t k, Complex v) {
        if (k >= c_.size())
            throw InsufficientOrderError("series: coefficient index exceeds truncation order");
        c_[k] = v;
    }

private:
    std::vector<Complex> c_;
};

enum class Elementary { Sin, Cos, Sqrt1m, Ln1p, Arcsin };

// Coefficientwise sum, order = min of the operand orders.
[[nodiscard]] TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
[[nodiscard]] TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
// Cauchy product truncated to the min order.
[[nodiscard]] TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
// f(g(h)); g must have an exactly zero constant term.
[[nodiscard]] TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);
// Termwise d/dh; the result's order drops by one.
[[nodiscard]] TruncatedSeries derivative(const TruncatedSeries& s);
[[nodiscard]] TruncatedSeries scale(const TruncatedSeries& s, Complex factor);
// s(alpha*h); alpha^k built by repeated multiplication (branch-free).
[[nodiscard]] TruncatedSeries scale_argument(const TruncatedSeries& s, Complex alpha);

// Maclaurin series of sin h, cos h, sqrt(1-h), ln(1+h), arcsin h.
[[nodiscard]] TruncatedSeries elementary_series(Elementary kind, std::size_t order);

// k-th derivative at 0, i.e. k! * coeff(k). Throws InsufficientOrderError
// for k beyond the truncation order.
[[nodiscard]] Complex derivative_at_zero(const TruncatedSeries& s, std::size_t k);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    return add(a, b);
}
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    return sub(a, b);
}
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    return mul(a, b);
}
inline TruncatedSeries operator*(Complex factor, const TruncatedSeries& s) {
    return scale(s, factor);
}

}  // namespace regge::series
