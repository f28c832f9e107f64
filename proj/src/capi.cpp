#include "reggemom.h"

#include <complex>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "regge/distribution.hpp"
#include "regge/group_measure.hpp"
#include "regge/moments.hpp"
#include "regge/series.hpp"
#include "regge/xcheck.hpp"

namespace {

thread_local std::string g_last_error;

rgm_status fail(rgm_status code, const char* what) {
    g_last_error = what != nullptr ? what : "unknown error";
    return code;
}

// Maps the library exception hierarchy onto status codes; most-derived first.
template <typename Fn>
rgm_status guarded(Fn&& fn) {
    try {
        fn();
        return RGM_OK;
    } catch (const regge::dist::SingularPointError& e) {
        return fail(RGM_ERR_SINGULAR_POINT, e.what());
    } catch (const regge::dist::DivergenceError& e) {
        return fail(RGM_ERR_DOMAIN, e.what());
    } catch (const regge::quad::QuadratureError& e) {
        return fail(RGM_ERR_NO_CONVERGENCE, e.what());
    } catch (const regge::series::InsufficientOrderError& e) {
        return fail(RGM_ERR_INSUFFICIENT_ORDER, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(RGM_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::domain_error& e) {
        return fail(RGM_ERR_DOMAIN, e.what());
    } catch (const std::exception& e) {
        return fail(RGM_ERR_INTERNAL, e.what());
    }
}

rgm_complex to_c(std::complex<double> z) { return rgm_complex{z.real(), z.imag()}; }

regge::moments::Variant to_variant(rgm_variant v) {
    if (v == RGM_VARIANT_ARCSIN) return regge::moments::Variant::Arcsin;
    if (v == RGM_VARIANT_LINEAR) return regge::moments::Variant::Linear;
    throw std::invalid_argument("unknown variant code");
}

regge::moments::Route to_route(rgm_route r) {
    switch (r) {
        case RGM_ROUTE_SERIES_UNRESCALED:
            return regge::moments::Route::SeriesUnrescaled;
        case RGM_ROUTE_SERIES_RESCALED:
            return regge::moments::Route::SeriesRescaled;
        case RGM_ROUTE_INTEGRAL_REP:
            return regge::moments::Route::IntegralRep;
        case RGM_ROUTE_RADIAL_QUADRATURE:
            return regge::moments::Route::RadialQuadrature;
    }
    throw std::invalid_argument("unknown route code");
}

regge::dist::Region to_region(rgm_region r) {
    if (r == RGM_REGION_SPACELIKE) return regge::dist::Region::Spacelike;
    if (r == RGM_REGION_TIMELIKE) return regge::dist::Region::Timelike;
    throw std::invalid_argument("unknown region code");
}

void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(what);
}

}  // namespace

struct rgm_report {
    std::vector<regge::xcheck::CheckReport> checks;
};

extern "C" {

const char* rgm_version(void) { return "1.0.0"; }

const char* rgm_last_error(void) { return g_last_error.c_str(); }

rgm_status rgm_moment(unsigned l, double gamma, rgm_variant variant, rgm_route route,
                      rgm_complex* out) {
    return guarded([&] {
        require(out != nullptr, "rgm_moment: out is NULL");
        const regge::moments::ModelParams p{gamma, to_variant(variant)};
        *out = to_c(regge::moments::moment_scalar(l, p, to_route(route)).value);
    });
}

rgm_status rgm_factorized_moment(unsigned l, unsigned m, double gamma,
                                 rgm_variant variant, rgm_complex* out) {
    return guarded([&] {
        require(out != nullptr, "rgm_factorized_moment: out is NULL");
        const regge::moments::ModelParams p{gamma, to_variant(variant)};
        *out = to_c(regge::moments::factorized_moment(l, m, p));
    });
}

rgm_status rgm_distribution(double vsq, double gamma, rgm_variant variant,
                            double* n_out, double* scaled_out) {
    return guarded([&] {
        require(n_out != nullptr || scaled_out != nullptr,
                "rgm_distribution: both outputs are NULL");
        const double n = regge::dist::distribution(vsq, gamma, to_variant(variant));
        if (n_out != nullptr) *n_out = n;
        if (scaled_out != nullptr)
            *scaled_out = 4.0 * 3.14159265358979323846 * 3.14159265358979323846 * n;
    });
}

rgm_status rgm_singular_point(double gamma, unsigned n, rgm_complex* location_out,
                              int* order_out) {
    return guarded([&] {
        require(location_out != nullptr || order_out != nullptr,
                "rgm_singular_point: both outputs are NULL");
        require(n >= 1, "rgm_singular_point: n must be >= 1");
        const auto pts = regge::dist::singular_points(gamma, n);
        const auto& pt = pts.at(n - 1);
        if (location_out != nullptr) *location_out = to_c(pt.location);
        if (order_out != nullptr) *order_out = pt.order;
    });
}

rgm_status rgm_local_maxima(double gamma, double vsq_lo, double vsq_hi,
                            rgm_variant variant, double* out, size_t capacity,
                            size_t* count_out) {
    return guarded([&] {
        require(count_out != nullptr, "rgm_local_maxima: count_out is NULL");
        require(out != nullptr || capacity == 0,
                "rgm_local_maxima: out is NULL with nonzero capacity");
        const auto maxima =
            regge::dist::local_maxima(gamma, vsq_lo, vsq_hi, to_variant(variant));
        *count_out = maxima.size();
        const size_t n = maxima.size() < capacity ? maxima.size() : capacity;
        for (size_t i = 0; i < n; ++i) out[i] = maxima[i];
    });
}

rgm_status rgm_decay_rate(double gamma, rgm_region region, rgm_variant variant,
                          double* fitted_out, double* theoretical_out) {
    return guarded([&] {
        require(fitted_out != nullptr || theoretical_out != nullptr,
                "rgm_decay_rate: both outputs are NULL");
        const auto fit = regge::dist::decay_rate(gamma, to_region(region),
                                                 to_variant(variant));
        if (fitted_out != nullptr) *fitted_out = fit.fitted_rate;
        if (theoretical_out != nullptr) *theoretical_out = fit.theoretical_rate;
    });
}

rgm_status rgm_ki1(rgm_complex x, rgm_complex* out) {
    return guarded([&] {
        require(out != nullptr, "rgm_ki1: out is NULL");
        *out = to_c(regge::dist::ki1(std::complex<double>{x.re, x.im}));
    });
}

rgm_status rgm_measure_norm(double* out) {
    return guarded([&] {
        require(out != nullptr, "rgm_measure_norm: out is NULL");
        *out = regge::measure::measure_norm();
    });
}

rgm_status rgm_verify_run(const char* only_family, rgm_report** out) {
    return guarded([&] {
        require(out != nullptr, "rgm_verify_run: out is NULL");
        regge::xcheck::RunConfig config;
        if (only_family != nullptr) {
            require(regge::xcheck::known_family(only_family),
                    "rgm_verify_run: unknown check family");
            config.only.emplace_back(only_family);
        }
        auto report = std::make_unique<rgm_report>();
        report->checks = regge::xcheck::run_all(config);
        *out = report.release();
    });
}

size_t rgm_report_size(const rgm_report* report) {
    return report != nullptr ? report->checks.size() : 0;
}

rgm_status rgm_report_entry(const rgm_report* report, size_t index,
                            rgm_check_entry* out) {
    return guarded([&] {
        require(report != nullptr, "rgm_report_entry: report is NULL");
        require(out != nullptr, "rgm_report_entry: out is NULL");
        require(index < report->checks.size(), "rgm_report_entry: index out of range");
        const auto& r = report->checks[index];
        out->name = r.name.c_str();
        out->lhs = to_c(r.lhs);
        out->rhs = to_c(r.rhs);
        out->abs_err = r.abs_err;
        out->rel_err = r.rel_err;
        out->tolerance = r.tolerance;
        out->relative_policy =
            r.policy == regge::xcheck::TolerancePolicy::Relative ? 1 : 0;
        out->passed = r.passed ? 1 : 0;
        out->informational = r.informational ? 1 : 0;
        out->note = r.note.c_str();
    });
}

int rgm_report_all_passed(const rgm_report* report) {
    if (report == nullptr) return 0;
    return regge::xcheck::all_passed(report->checks) ? 1 : 0;
}

rgm_status rgm_report_json(const rgm_report* report, char** json_out) {
    return guarded([&] {
        require(report != nullptr, "rgm_report_json: report is NULL");
        require(json_out != nullptr, "rgm_report_json: json_out is NULL");
        const std::string text = regge::xcheck::to_json(report->checks);
        char* buf = static_cast<char*>(std::malloc(text.size() + 1));
        if (buf == nullptr) throw std::bad_alloc();
        std::memcpy(buf, text.c_str(), text.size() + 1);
        *json_out = buf;
    });
}

void rgm_report_free(rgm_report* report) { delete report; }

void rgm_string_free(char* s) { std::free(s); }

int rgm_known_check_family(const char* name) {
    if (name == nullptr) return 0;
    return regge::xcheck::known_family(name) ? 1 : 0;
}

const char* const* rgm_check_families(void) {
    static const std::vector<const char*> names = [] {
        std::vector<const char*> v;
        for (const auto& fam : regge::xcheck::check_families()) v.push_back(fam.c_str());
        v.push_back(nullptr);
        return v;
    }();
    return names.data();
}

}  // extern "C"
