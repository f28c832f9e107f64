#include "regge/distribution.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

namespace regge::dist {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kOne{1.0, 0.0};
// Beyond this |Re(pi w/2)| the direct sinh evaluation would overflow and the
// value is reassembled from logarithms instead.
constexpr double kLogPathThreshold = 300.0;
constexpr double kUnderflowLogN = -690.77552789821368;  // ln(1e-300)

void validate_gamma(double gamma) {
    if (!(gamma > 0.0) || std::isinf(gamma) || std::isnan(gamma))
        throw std::invalid_argument("distribution: requires 0 < gamma < infinity");
}

Complex canonical(Complex w) {
    if (w.real() < 0.0 || (w.real() == 0.0 && w.imag() < 0.0)) return -w;
    return w;
}

// sinh(z)/z; the small-|z| series keeps the removable singularity exact and
// even in z.
Complex sinhc(Complex z) {
    const Complex s = z * z;
    if (std::abs(z) < 0.5) {
        constexpr std::array<double, 8> inv_odd_factorial = {
            1.0,
            1.0 / 6.0,
            1.0 / 120.0,
            1.0 / 5040.0,
            1.0 / 362880.0,
            1.0 / 39916800.0,
            1.0 / 6227020800.0,
            1.0 / 1307674368000.0,
        };
        Complex acc{inv_odd_factorial[7], 0.0};
        for (int k = 6; k >= 0; --k) acc = acc * s + Complex{inv_odd_factorial[k], 0.0};
        return acc;
    }
    return std::sinh(z) / z;
}

// ln|sinh z|, safe for any |Re z|; the sign canonicalization keeps it even.
double log_abs_sinh(Complex z) {
    const Complex zc = canonical(z);
    if (std::abs(zc) < 0.5) return std::log(std::abs(zc * sinhc(zc)));
    return zc.real() - std::log(2.0) + std::log(std::abs(kOne - std::exp(-2.0 * zc)));
}

// ln((2 pi)^2 N) for the arcsin form, defined for every w.
double log_scaled_from_w_arcsin(Complex w) {
    const Complex z = 0.5 * kPi * w;
    const Complex rational = 0.25 * (w * w) + kOne;
    double log_sinhc;
    if (std::abs(z) < 0.5) {
        log_sinhc = std::log(std::abs(sinhc(z)));
    } else {
        log_sinhc = log_abs_sinh(z) - std::log(std::abs(z));
    }
    return -2.0 * (std::log(std::abs(rational)) + log_sinhc);
}

double log_scaled_from_w_linear(Complex w) {
    const Complex wc = canonical(w);
    const Complex x = 0.5 * wc;
    if (!(x.real() > 0.0))
        throw std::domain_error("distribution: linear form needs Re w > 0");
    // (2 pi)^2 N = |Ki1(x)|^2 / |x|^2 and ln|Ki1(x)| = ln|e^x Ki1(x)| - Re x.
    return 2.0 * (std::log(std::abs(ki1_scaled(x))) - x.real() - std::log(std::abs(x)));
}

void check_singular_proximity(Complex vsq, double gamma) {
    const Complex x1 = moments::singular_point_x0(gamma);
    const double base = std::abs(x1);
    const double reach = 2.0 * std::abs(vsq) + 10.0;
    const auto n_lim = static_cast<unsigned>(std::ceil(std::sqrt(reach / base))) + 1;
    for (unsigned n = 1; n <= n_lim; ++n) {
        const Complex loc = static_cast<double>(n) * static_cast<double>(n) * x1;
        if (std::abs(vsq - loc) < 1e-9 * std::abs(loc)) throw SingularPointError(n, loc);
    }
}

struct LinearFit4 {
    double slope = 0.0;
};

// Least squares for y ~ s*A + p*ln A + c + d/A via normal equations.
LinearFit4 fit_decay(const std::vector<double>& abs_a, const std::vector<double>& y) {
    constexpr int kDim = 4;
    double m[kDim][kDim] = {};
    double rhs[kDim] = {};
    for (std::size_t i = 0; i < abs_a.size(); ++i) {
        const double a = abs_a[i];
        const std::array<double, kDim> row = {a, std::log(a), 1.0, 1.0 / a};
        for (int r = 0; r < kDim; ++r) {
            rhs[r] += row[r] * y[i];
            for (int c = 0; c < kDim; ++c) m[r][c] += row[r] * row[c];
        }
    }
    // Gaussian elimination with partial pivoting.
    std::array<int, kDim> perm = {0, 1, 2, 3};
    for (int col = 0; col < kDim; ++col) {
        int pivot = col;
        for (int r = col + 1; r < kDim; ++r)
            if (std::abs(m[perm[r]][col]) > std::abs(m[perm[pivot]][col])) pivot = r;
        std::swap(perm[col], perm[pivot]);
        const double diag = m[perm[col]][col];
        for (int r = col + 1; r < kDim; ++r) {
            const double factor = m[perm[r]][col] / diag;
            for (int c = col; c < kDim; ++c) m[perm[r]][c] -= factor * m[perm[col]][c];
            rhs[perm[r]] -= factor * rhs[perm[col]];
        }
    }
    std::array<double, kDim> sol = {};
    for (int col = kDim; col-- > 0;) {
        double acc = rhs[perm[col]];
        for (int c = col + 1; c < kDim; ++c) acc -= m[perm[col]][c] * sol[c];
        sol[col] = acc / m[perm[col]][col];
    }
    return LinearFit4{sol[0]};
}

double golden_section_max(double a, double b, const std::function<double(double)>& f) {
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > 1e-8) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

double AreaSquared::area_abs() const { return std::sqrt(std::abs(vsq)); }

bool AreaSquared::physical() const { return vsq.imag() == 0.0; }

Complex branch_w(Complex vsq, double gamma) {
    validate_gamma(gamma);
    const Complex factor{1.0 / gamma, -1.0};
    return canonical(std::sqrt(factor * factor * vsq));
}

namespace detail {

double arcsin_from_w(Complex w) {
    const Complex z = 0.5 * kPi * w;
    if (std::abs(z.real()) <= kLogPathThreshold) {
        // N = |1 / (2 pi (w^2/4 + 1) sinhc(pi w/2))|^2; manifestly even in w.
        const Complex denom = 2.0 * kPi * (0.25 * (w * w) + kOne) * sinhc(z);
        return std::norm(kOne / denom);
    }
    return std::exp(log_scaled_from_w_arcsin(w)) / (4.0 * kPi * kPi);
}

double linear_from_w(Complex w) {
    const Complex wc = canonical(w);
    const Complex x = 0.5 * wc;
    if (!(x.real() > 0.0))
        throw std::domain_error("distribution: linear form needs Re w > 0");
    if (x.real() <= kLogPathThreshold) return std::norm(ki1(x) / (2.0 * kPi * x));
    return std::exp(log_scaled_from_w_linear(wc)) / (4.0 * kPi * kPi);
}

}  // namespace detail

double distribution_arcsin(Complex vsq, double gamma) {
    validate_gamma(gamma);
    check_singular_proximity(vsq, gamma);
    return detail::arcsin_from_w(branch_w(vsq, gamma));
}

double distribution_linear(Complex vsq, double gamma) {
    validate_gamma(gamma);
    if (vsq == Complex{0.0, 0.0})
        throw DivergenceError(
            "distribution: the linear-variant density diverges at vsq = 0 "
            "(integrable singularity)");
    return detail::linear_from_w(branch_w(vsq, gamma));
}

double distribution(double vsq, double gamma, Variant variant) {
    return variant == Variant::Arcsin
               ? distribution_arcsin(Complex{vsq, 0.0}, gamma)
               : distribution_linear(Complex{vsq, 0.0}, gamma);
}

double log_scaled_distribution(double vsq, double gamma, Variant variant) {
    validate_gamma(gamma);
    if (variant == Variant::Arcsin)
        return log_scaled_from_w_arcsin(branch_w(Complex{vsq, 0.0}, gamma));
    if (vsq == 0.0)
        throw DivergenceError(
            "distribution: the linear-variant density diverges at vsq = 0 "
            "(integrable singularity)");
    return log_scaled_from_w_linear(branch_w(Complex{vsq, 0.0}, gamma));
}

Complex ki1_scaled(Complex x) {
    if (!(x.real() > 0.0)) throw std::domain_error("ki1: requires Re x > 0");
    // Truncate where exp(-Re x (cosh T - 1)) < 1e-18.
    const double T = std::acosh(1.0 + 41.5 / x.real()) + 0.5;
    const quad::QuadratureResult r = quad::integrate(
        [x](double t) {
            const double ch = std::cosh(t);
            return std::exp(-x * (ch - 1.0)) / ch;
        },
        0.0, T);
    return r.value;
}

Complex ki1(Complex x) { return std::exp(-x) * ki1_scaled(x); }

Complex ki1_via_k0(Complex x) {
    if (!(x.real() > 0.0)) throw std::domain_error("ki1: requires Re x > 0");
    const auto k0 = [](Complex z) {
        const double T = std::acosh(1.0 + 45.0 / z.real()) + 0.5;
        return quad::integrate([z](double t) { return std::exp(-z * std::cosh(t)); },
                               0.0, T)
            .value;
    };
    const quad::QuadratureResult outer = quad::integrate(
        [&k0, x](double s) { return k0(x * s); }, 1.0,
        std::numeric_limits<double>::infinity());
    return x * outer.value;
}

std::vector<SingularPoint> singular_points(double gamma, unsigned n_max) {
    validate_gamma(gamma);
    if (n_max < 1) throw std::invalid_argument("singular_points: requires n_max >= 1");
    const Complex den = (Complex{gamma, 0.0} + Complex{0.0, 1.0}) *
                        (Complex{gamma, 0.0} + Complex{0.0, 1.0});
    std::vector<SingularPoint> out;
    out.reserve(n_max);
    for (unsigned n = 1; n <= n_max; ++n) {
        const double num = 4.0 * static_cast<double>(n) * static_cast<double>(n) *
                           gamma * gamma;
        out.push_back(SingularPoint{n, Complex{num, 0.0} / den, n == 1 ? 2 : 1});
    }
    return out;
}

std::vector<double> local_maxima(double gamma, double vsq_lo, double vsq_hi,
                                 Variant variant, int grid_points) {
    validate_gamma(gamma);
    if (!(vsq_lo < vsq_hi))
        throw std::invalid_argument("local_maxima: requires vsq_lo < vsq_hi");
    if (grid_points < 3)
        throw std::invalid_argument("local_maxima: requires at least 3 grid points");

    // The log of the distribution has the same maxima and never underflows.
    const auto value = [gamma, variant](double vsq) {
        try {
            return log_scaled_distribution(vsq, gamma, variant);
        } catch (const DivergenceError&) {
            return std::numeric_limits<double>::quiet_NaN();
        }
    };

    const double step = (vsq_hi - vsq_lo) / static_cast<double>(grid_points - 1);
    std::vector<double> ys(static_cast<std::size_t>(grid_points));
    for (int i = 0; i < grid_points; ++i)
        ys[static_cast<std::size_t>(i)] = value(vsq_lo + step * i);

    std::vector<double> maxima;
    for (int i = 1; i + 1 < grid_points; ++i) {
        const double y = ys[static_cast<std::size_t>(i)];
        if (y > ys[static_cast<std::size_t>(i - 1)] &&
            y > ys[static_cast<std::size_t>(i + 1)]) {
            const double a = vsq_lo + step * (i - 1);
            const double b = vsq_lo + step * (i + 1);
            maxima.push_back(golden_section_max(a, b, value));
        }
    }
    return maxima;
}

DecayFit decay_rate(double gamma, Region region, Variant variant, double abs_lo,
                    double abs_hi) {
    validate_gamma(gamma);
    if (!(abs_lo > 0.0 && abs_lo < abs_hi))
        throw std::invalid_argument("decay_rate: requires 0 < abs_lo < abs_hi");

    constexpr int kSamples = 201;
    const double sign = region == Region::Spacelike ? -1.0 : 1.0;
    const double log_scale_const = std::log(4.0 * kPi * kPi);

    std::vector<double> abs_a;
    std::vector<double> y;
    bool shrunk = false;
    double hi_used = abs_lo;
    for (int i = 0; i < kSamples; ++i) {
        const double a =
            abs_lo + (abs_hi - abs_lo) * static_cast<double>(i) / (kSamples - 1);
        const double vsq = sign * a * a;
        const double log_n =
            log_scaled_distribution(vsq, gamma, variant) - log_scale_const;
        if (log_n < kUnderflowLogN) {
            shrunk = true;
            break;  // the tail only decreases further
        }
        abs_a.push_back(a);
        y.push_back(-log_n);
        hi_used = a;
    }
    if (abs_a.size() < 8)
        throw std::domain_error(
            "decay_rate: distribution underflows across the whole fit window");

    DecayFit fit;
    fit.fitted_rate = fit_decay(abs_a, y).slope;
    const double base = variant == Variant::Arcsin ? kPi : 1.0;
    fit.theoretical_rate = region == Region::Timelike ? base / gamma : base;
    fit.window_lo = abs_lo;
    fit.window_hi = hi_used;
    fit.window_shrunk = shrunk;
    return fit;
}

std::vector<DistributionSample> sample_distribution(double gamma, Variant variant,
                                                    double vsq_lo, double vsq_hi,
                                                    int samples) {
    validate_gamma(gamma);
    if (samples < 2)
        throw std::invalid_argument("sample_distribution: requires samples >= 2");
    if (!(vsq_lo < vsq_hi))
        throw std::invalid_argument("sample_distribution: requires vsq_lo < vsq_hi");

    std::vector<DistributionSample> out;
    out.reserve(static_cast<std::size_t>(samples));
    const double step = (vsq_hi - vsq_lo) / static_cast<double>(samples - 1);
    for (int i = 0; i < samples; ++i) {
        const double vsq = vsq_lo + step * i;
        double n_value;
        try {
            n_value = distribution(vsq, gamma, variant);
        } catch (const DivergenceError&) {
            n_value = std::numeric_limits<double>::quiet_NaN();
        }
        out.push_back(DistributionSample{vsq, n_value, 4.0 * kPi * kPi * n_value});
    }
    return out;
}

}  // namespace regge::dist
