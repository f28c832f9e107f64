#include "regge/series.hpp"

#include <algorithm>

namespace regge::series {

namespace {

std::size_t min_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    return std::min(a.order(), b.order());
}

}  // namespace

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t k = min_order(a, b);
    TruncatedSeries out(k);
    for (std::size_t i = 0; i <= k; ++i) out.set_coeff(i, a.coeff(i) + b.coeff(i));
    return out;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t k = min_order(a, b);
    TruncatedSeries out(k);
    for (std::size_t i = 0; i <= k; ++i) out.set_coeff(i, a.coeff(i) - b.coeff(i));
    return out;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t k = min_order(a, b);
    TruncatedSeries out(k);
    for (std::size_t i = 0; i <= std::min(k, a.order()); ++i) {
        const Complex ai = a.coeff(i);
        if (ai == Complex{0.0, 0.0}) continue;
        for (std::size_t j = 0; i + j <= k && j <= b.order(); ++j)
            out.set_coeff(i + j, out.coeff(i + j) + ai * b.coeff(j));
    }
    return out;
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (g.coeff(0) != Complex{0.0, 0.0})
        throw std::invalid_argument("series: composition requires a zero constant term");
    const std::size_t k = min_order(f, g);
    // Horner over the truncated coefficients of f; every product truncates
    // back to order k, which is exact because g starts at h^1.
    TruncatedSeries gk(k);
    for (std::size_t i = 0; i <= k; ++i) gk.set_coeff(i, g.coeff(i));
    TruncatedSeries out = TruncatedSeries::constant(f.coeff(k), k);
    for (std::size_t n = k; n-- > 0;) {
        out = mul(out, gk);
        out.set_coeff(0, out.coeff(0) + f.coeff(n));
    }
    return out;
}

TruncatedSeries derivative(const TruncatedSeries& s) {
    if (s.order() == 0)
        throw InsufficientOrderError("series: derivative of an order-0 series has no terms");
    TruncatedSeries out(s.order() - 1);
    for (std::size_t i = 0; i + 1 <= s.order(); ++i)
        out.set_coeff(i, static_cast<double>(i + 1) * s.coeff(i + 1));
    return out;
}

TruncatedSeries scale(const TruncatedSeries& s, Complex factor) {
    TruncatedSeries out(s.order());
    for (std::size_t i = 0; i <= s.order(); ++i) out.set_coeff(i, factor * s.coeff(i));
    return out;
}

TruncatedSeries scale_argument(const TruncatedSeries& s, Complex alpha) {
    TruncatedSeries out(s.order());
    Complex p{1.0, 0.0};
    for (std::size_t i = 0; i <= s.order(); ++i) {
        out.set_coeff(i, p * s.coeff(i));
        p *= alpha;
    }
    return out;
}

TruncatedSeries elementary_series(Elementary kind, std::size_t order) {
    TruncatedSeries s(order);
    switch (kind) {
        case Elementary::Sin: {
            // c_{k} = -c_{k-2} / ((k-1)k), starting from c_1 = 1.
            double c = 1.0;
            for (std::size_t k = 1; k <= order; k += 2) {
                s.set_coeff(k, Complex{c, 0.0});
                c = -c / static_cast<double>((k + 1) * (k + 2));
            }
            break;
        }
        case Elementary::Cos: {
            double c = 1.0;
            for (std::size_t k = 0; k <= order; k += 2) {
                s.set_coeff(k, Complex{c, 0.0});
                c = -c / static_cast<double>((k + 1) * (k + 2));
            }
            break;
        }
        case Elementary::Sqrt1m: {
            // a_0 = 1, a_k = a_{k-1} (2k-3) / (2k).
            double a = 1.0;
            s.set_coeff(0, Complex{1.0, 0.0});
            for (std::size_t k = 1; k <= order; ++k) {
                a *= static_cast<double>(2.0 * static_cast<double>(k) - 3.0) /
                     (2.0 * static_cast<double>(k));
                s.set_coeff(k, Complex{a, 0.0});
            }
            break;
        }
        case Elementary::Ln1p: {
            double sign = 1.0;
            for (std::size_t k = 1; k <= order; ++k) {
                s.set_coeff(k, Complex{sign / static_cast<double>(k), 0.0});
                sign = -sign;
            }
            break;
        }
        case Elementary::Arcsin: {
            // c_{2k+1} = t_k / (2k+1) with t_0 = 1, t_k = t_{k-1} (2k-1)/(2k).
            double t = 1.0;
            for (std::size_t k = 0; 2 * k + 1 <= order; ++k) {
                if (k > 0)
                    t *= static_cast<double>(2 * k - 1) / static_cast<double>(2 * k);
                s.set_coeff(2 * k + 1, Complex{t / static_cast<double>(2 * k + 1), 0.0});
            }
            break;
        }
    }
    return s;
}

Complex derivative_at_zero(const TruncatedSeries& s, std::size_t k) {
    if (k > s.order())
        throw InsufficientOrderError(
            "series: requested derivative order exceeds the truncation order");
    double factorial = 1.0;
    for (std::size_t j = 2; j <= k; ++j) factorial *= static_cast<double>(j);
    return factorial * s.coeff(k);
}

}  // namespace regge::series
