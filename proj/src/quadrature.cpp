#include "regge/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace regge::quad {

namespace {

// 15-point Kronrod abscissae on [0, 1] (symmetric pairs) with the embedded
// 7-point Gauss rule on the odd-index nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    Complex k15{0.0, 0.0};
    double err = 0.0;
};

Panel gk15(const Integrand& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    Complex k{0.0, 0.0};
    Complex g{0.0, 0.0};
    // Fixed accumulation order (outermost pair inward, center last).
    for (int i = 0; i < 7; ++i) {
        const double dx = hw * kXgk[i];
        const Complex sum = f(c - dx) + f(c + dx);
        k += kWgk[i] * sum;
        if (i % 2 == 1) g += kWg[i / 2] * sum;
    }
    const Complex fc = f(c);
    k += kWgk[7] * fc;
    g += kWg[3] * fc;
    Panel p;
    p.k15 = hw * k;
    p.err = std::abs(hw * (k - g));
    return p;
}

struct AdaptState {
    const Integrand* f = nullptr;
    int max_panels = 0;
    int panels = 1;
    bool budget_hit = false;
};

// Depth-first, left to right; the summation order is therefore fixed.
void adapt(AdaptState& st, double a, double b, const Panel& p, double tol, int depth,
           Complex& value, double& err) {
    const double width_floor = 1e-15 * (std::abs(a) + std::abs(b)) + 1e-300;
    if (p.err <= tol || depth >= 60 || (b - a) <= width_floor) {
        value += p.k15;
        err += p.err;
        return;
    }
    if (st.panels >= st.max_panels) {
        st.budget_hit = true;
        value += p.k15;
        err += p.err;
        return;
    }
    ++st.panels;
    const double m = 0.5 * (a + b);
    const Panel left = gk15(*st.f, a, m);
    const Panel right = gk15(*st.f, m, b);
    adapt(st, a, m, left, 0.5 * tol, depth + 1, value, err);
    adapt(st, m, b, right, 0.5 * tol, depth + 1, value, err);
}

QuadratureResult integrate_finite(const Integrand& f, double a, double b,
                                  const QuadratureSpec& spec) {
    if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0) || spec.max_subdivisions < 1)
        throw std::invalid_argument("quadrature: tolerances must be positive and max_subdivisions >= 1");
    if (!(a <= b)) throw std::invalid_argument("quadrature: requires a <= b");

    QuadratureResult r;
    if (a == b) return r;

    const Panel root = gk15(f, a, b);
    const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(root.k15));
    AdaptState st;
    st.f = &f;
    st.max_panels = spec.max_subdivisions;
    Complex value{0.0, 0.0};
    double err = 0.0;
    adapt(st, a, b, root, tol, 0, value, err);

    r.value = value;
    r.err_estimate = err;
    r.subdivisions = st.panels;
    r.converged = !st.budget_hit;
    const double final_tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(value));
    if (st.budget_hit && err > final_tol)
        throw QuadratureError("quadrature: subdivision budget exhausted before convergence",
                              value, err);
    return r;
}

QuadratureResult integrate_tail(const Integrand& f, double a, const QuadratureSpec& spec) {
    // Probe the envelope on a geometric grid to pick the first truncation point.
    double peak = 0.0;
    double t = a + 1.0;
    double cut = a + 1.0;
    for (int j = 0; j < 200; ++j) {
        const double mag = std::abs(f(t));
        peak = std::max(peak, mag);
        cut = t;
        if (peak > 0.0 && mag <= spec.tail_cut * peak) break;
        if (t - a > 1e8) break;
        t = a + (t - a) * 1.5;
    }

    QuadratureResult r = integrate_finite(f, a, cut, spec);
    double lo = cut;
    double len = std::max(cut - a, 1.0);
    int settled = 0;
    for (int k = 0; k < 64; ++k) {
        const QuadratureResult ext = integrate_finite(f, lo, lo + len, spec);
        r.value += ext.value;
        r.err_estimate += ext.err_estimate;
        r.subdivisions += ext.subdivisions;
        r.converged = r.converged && ext.converged;
        settled = (std::abs(ext.value) < spec.abs_tol) ? settled + 1 : 0;
        if (settled >= 2) return r;
        lo += len;
        len *= 2.0;
    }
    throw QuadratureError("quadrature: infinite tail failed to settle", r.value,
                          r.err_estimate);
}

}  // namespace

QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureSpec& spec) {
    if (std::isinf(b)) {
        if (b < 0) throw std::invalid_argument("quadrature: upper limit is -infinity");
        return integrate_tail(f, a, spec);
    }
    return integrate_finite(f, a, b, spec);
}

double integrate_real(const std::function<double(double)>& f, double a, double b,
                      const QuadratureSpec& spec) {
    const QuadratureResult r =
        integrate([&f](double x) { return Complex{f(x), 0.0}; }, a, b, spec);
    return r.value.real();
}

}  // namespace regge::quad
