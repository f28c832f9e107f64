// Command-line front end over the C API: moment tables, distribution
// sampling, singularity listing, and the cross-check suite.
//
// Exit codes: 0 success, 1 computation or check failure, 2 usage.

#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "reggemom.h"

namespace {

using nlohmann::json;

struct Options {
    double gamma = 1.0;
    std::string variant = "arcsin";
    double vsq_min = -10.0;
    double vsq_max = 10.0;
    int samples = 201;
    unsigned l = 0;
    unsigned m = 0;
    unsigned n_max = 3;
    std::string format = "csv";
    std::string output;
    std::string only;
    std::string config;
};

// CLI11 reads config files only while parsing the root app, so a per-subcommand
// file is applied here instead: each key=value line feeds the matching option
// unless the command line already set it. Validators still run via the option
// callback, so config values obey the same checks as flags.
int apply_config(CLI::App* sub, const std::string& path) {
    std::vector<CLI::ConfigItem> items;
    try {
        items = CLI::ConfigINI{}.from_file(path);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    for (const auto& item : items) {
        CLI::Option* op = item.parents.empty()
                              ? sub->get_option_no_throw("--" + item.name)
                              : nullptr;
        if (op == nullptr) {
            std::cerr << "unknown config key: " << item.fullname() << "\n";
            return 2;
        }
        if (op->count() > 0) continue;  // flags win
        try {
            for (const auto& input : item.inputs) op->add_result(input);
            op->run_callback();
        } catch (const CLI::Error& e) {
            std::cerr << "config key " << item.name << ": " << e.what() << "\n";
            return 2;
        }
    }
    return 0;
}

// 17 significant digits: lossless double round-trip, locale-independent.
std::string num17(double v) {
    char buf[40];
    const auto res =
        std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

rgm_variant variant_code(const std::string& name) {
    return name == "linear" ? RGM_VARIANT_LINEAR : RGM_VARIANT_ARCSIN;
}

int computation_error(const char* where) {
    std::cerr << where << ": " << rgm_last_error() << "\n";
    return 1;
}

// Runs `body` with the chosen output stream (stdout or --output file).
template <typename Body>
int with_output(const Options& opt, Body&& body) {
    if (opt.output.empty()) return body(std::cout);
    std::ofstream file(opt.output);
    if (!file) {
        std::cerr << "cannot open output file: " << opt.output << "\n";
        return 1;
    }
    return body(file);
}

int run_distribution(const Options& opt) {
    const rgm_variant variant = variant_code(opt.variant);
    struct Row {
        double vsq, n, scaled;
    };
    std::vector<Row> rows;
    rows.reserve(static_cast<std::size_t>(opt.samples));
    const double step = (opt.vsq_max - opt.vsq_min) /
                        static_cast<double>(opt.samples - 1);
    for (int i = 0; i < opt.samples; ++i) {
        const double vsq =
            i == opt.samples - 1 ? opt.vsq_max : opt.vsq_min + step * i;
        double n = 0.0;
        double scaled = 0.0;
        const rgm_status rc = rgm_distribution(vsq, opt.gamma, variant, &n, &scaled);
        if (rc == RGM_ERR_DOMAIN) {
            // The linear variant diverges (integrably) at vsq = 0.
            n = std::nan("");
            scaled = std::nan("");
        } else if (rc != RGM_OK) {
            return computation_error("distribution");
        }
        rows.push_back({vsq, n, scaled});
    }
    return with_output(opt, [&](std::ostream& os) {
        if (opt.format == "json") {
            json jrows = json::array();
            for (const auto& r : rows)
                jrows.push_back({{"vsq", r.vsq}, {"N", r.n}, {"scaledN", r.scaled}});
            const json doc = {{"command", "distribution"}, {"gamma", opt.gamma},
                              {"variant", opt.variant},    {"vsq_min", opt.vsq_min},
                              {"vsq_max", opt.vsq_max},    {"samples", opt.samples},
                              {"rows", jrows}};
            os << doc.dump(2) << "\n";
        } else {
            os << "vsq,N,scaledN\n";
            for (const auto& r : rows)
                os << num17(r.vsq) << "," << num17(r.n) << "," << num17(r.scaled)
                   << "\n";
        }
        return 0;
    });
}

int run_moments(const Options& opt) {
    const rgm_variant variant = variant_code(opt.variant);
    const bool arcsin = variant == RGM_VARIANT_ARCSIN;
    const rgm_route oracle_route =
        arcsin ? RGM_ROUTE_INTEGRAL_REP : RGM_ROUTE_RADIAL_QUADRATURE;
    const char* oracle_name = arcsin ? "integral_rep" : "radial_quadrature";
    struct Row {
        unsigned l;
        rgm_complex unresc, resc, oracle, factorized;
        bool agrees;
    };
    auto rel_gap = [](rgm_complex a, rgm_complex b) {
        const double d = std::hypot(a.re - b.re, a.im - b.im);
        const double s = std::max(std::hypot(a.re, a.im), std::hypot(b.re, b.im));
        return s > 0.0 ? d / s : 0.0;
    };
    std::vector<Row> rows;
    for (unsigned l = 0; l <= opt.l; ++l) {
        Row row{};
        row.l = l;
        if (rgm_moment(l, opt.gamma, variant, RGM_ROUTE_SERIES_UNRESCALED,
                       &row.unresc) != RGM_OK ||
            rgm_moment(l, opt.gamma, variant, RGM_ROUTE_SERIES_RESCALED, &row.resc) !=
                RGM_OK ||
            rgm_moment(l, opt.gamma, variant, oracle_route, &row.oracle) != RGM_OK ||
            rgm_factorized_moment(l, opt.m, opt.gamma, variant, &row.factorized) !=
                RGM_OK) {
            return computation_error("moments");
        }
        // Series routes are exact to rounding; the oracle route carries
        // quadrature error, so it gets the looser budget.
        row.agrees = rel_gap(row.unresc, row.resc) <= 1e-9 &&
                     rel_gap(row.oracle, row.resc) <= 1e-6;
        rows.push_back(row);
    }
    return with_output(opt, [&](std::ostream& os) {
        if (opt.format == "json") {
            json jrows = json::array();
            for (const auto& r : rows) {
                jrows.push_back(
                    {{"l", r.l},
                     {"routes",
                      {{"series_unrescaled", {r.unresc.re, r.unresc.im}},
                       {"series_rescaled", {r.resc.re, r.resc.im}},
                       {oracle_name, {r.oracle.re, r.oracle.im}}}},
                     {"agrees", r.agrees},
                     {"factorized", {r.factorized.re, r.factorized.im}}});
            }
            const json doc = {{"command", "moments"}, {"gamma", opt.gamma},
                              {"variant", opt.variant}, {"l_max", opt.l},
                              {"m", opt.m},             {"rows", jrows}};
            os << doc.dump(2) << "\n";
        } else {
            os << "l,unrescaled_re,unrescaled_im,rescaled_re,rescaled_im,oracle,"
                  "oracle_re,oracle_im,agrees,factorized_re,factorized_im\n";
            for (const auto& r : rows) {
                os << r.l << "," << num17(r.unresc.re) << "," << num17(r.unresc.im)
                   << "," << num17(r.resc.re) << "," << num17(r.resc.im) << ","
                   << oracle_name << "," << num17(r.oracle.re) << ","
                   << num17(r.oracle.im) << "," << (r.agrees ? "true" : "false")
                   << "," << num17(r.factorized.re) << "," << num17(r.factorized.im)
                   << "\n";
            }
        }
        return 0;
    });
}

int run_singularities(const Options& opt) {
    struct Row {
        unsigned n;
        rgm_complex location;
        int order;
    };
    std::vector<Row> rows;
    for (unsigned n = 1; n <= opt.n_max; ++n) {
        Row row{};
        row.n = n;
        if (rgm_singular_point(opt.gamma, n, &row.location, &row.order) != RGM_OK)
            return computation_error("singularities");
        rows.push_back(row);
    }
    return with_output(opt, [&](std::ostream& os) {
        if (opt.format == "json") {
            json jrows = json::array();
            for (const auto& r : rows)
                jrows.push_back({{"n", r.n},
                                 {"location", {r.location.re, r.location.im}},
                                 {"order", r.order}});
            const json doc = {{"command", "singularities"},
                              {"gamma", opt.gamma},
                              {"n_max", opt.n_max},
                              {"rows", jrows}};
            os << doc.dump(2) << "\n";
        } else {
            os << "n,location_re,location_im,order\n";
            for (const auto& r : rows)
                os << r.n << "," << num17(r.location.re) << ","
                   << num17(r.location.im) << "," << r.order << "\n";
        }
        return 0;
    });
}

int run_verify(const Options& opt) {
    if (!opt.only.empty() && rgm_known_check_family(opt.only.c_str()) == 0) {
        std::cerr << "unknown check family: " << opt.only << "\nknown families:";
        for (const char* const* f = rgm_check_families(); *f != nullptr; ++f)
            std::cerr << " " << *f;
        std::cerr << "\n";
        return 2;
    }
    rgm_report* report = nullptr;
    if (rgm_verify_run(opt.only.empty() ? nullptr : opt.only.c_str(), &report) !=
        RGM_OK) {
        return computation_error("verify");
    }
    const std::size_t total = rgm_report_size(report);
    std::size_t passed = 0;
    const int write_rc = with_output(opt, [&](std::ostream& os) {
        if (opt.format == "json") {
            char* text = nullptr;
            if (rgm_report_json(report, &text) != RGM_OK) {
                rgm_report_free(report);
                return computation_error("verify");
            }
            os << text << "\n";
            rgm_string_free(text);
            for (std::size_t i = 0; i < total; ++i) {
                rgm_check_entry e{};
                rgm_report_entry(report, i, &e);
                if (e.passed != 0) ++passed;
            }
        } else {
            os << "name,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,tolerance,"
                  "policy,passed,informational\n";
            for (std::size_t i = 0; i < total; ++i) {
                rgm_check_entry e{};
                if (rgm_report_entry(report, i, &e) != RGM_OK) continue;
                if (e.passed != 0) ++passed;
                os << e.name << "," << num17(e.lhs.re) << "," << num17(e.lhs.im)
                   << "," << num17(e.rhs.re) << "," << num17(e.rhs.im) << ","
                   << num17(e.abs_err) << "," << num17(e.rel_err) << ","
                   << num17(e.tolerance) << ","
                   << (e.relative_policy != 0 ? "relative" : "absolute") << ","
                   << (e.passed != 0 ? "true" : "false") << ","
                   << (e.informational != 0 ? "true" : "false") << "\n";
            }
        }
        return 0;
    });
    const bool ok = rgm_report_all_passed(report) != 0;
    rgm_report_free(report);
    if (write_rc != 0) return write_rc;
    std::cerr << passed << "/" << total << " checks passed\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Moments and area distribution from integrating the connection "
                 "out of the Regge path integral"};
    app.require_subcommand(1);
    Options opt;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", opt.config,
                        "line-oriented key=value file; command-line flags win");
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        sub->add_option("--output", opt.output, "write to this file instead of stdout");
    };
    const auto add_model = [&](CLI::App* sub) {
        sub->add_option("--gamma", opt.gamma, "Barbero-Immirzi parameter (> 0)")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("--variant", opt.variant, "action variant")
            ->check(CLI::IsMember({"arcsin", "linear"}))
            ->capture_default_str();
    };

    CLI::App* d = app.add_subcommand(
        "distribution", "sample N(vsq) and (2 pi)^2 N(vsq) on a uniform grid");
    add_model(d);
    d->add_option("--vsq-min", opt.vsq_min, "left edge of the vsq grid")
        ->capture_default_str();
    d->add_option("--vsq-max", opt.vsq_max, "right edge of the vsq grid")
        ->capture_default_str();
    d->add_option("--samples", opt.samples, "grid points (>= 2)")
        ->check(CLI::Range(2, 10000000))
        ->capture_default_str();
    add_common(d);

    CLI::App* mo = app.add_subcommand(
        "moments", "monomial moments on every available route, plus the "
                   "factorized pair (l, m)");
    add_model(mo);
    mo->add_option("--l", opt.l, "emit rows for l = 0..L")->capture_default_str();
    mo->add_option("--m", opt.m, "second index of the factorized pair")
        ->capture_default_str();
    add_common(mo);

    CLI::App* s = app.add_subcommand("singularities",
                                     "singular points of the reconstructed density");
    s->add_option("--gamma", opt.gamma, "Barbero-Immirzi parameter (> 0)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    s->add_option("--n-max", opt.n_max, "list n = 1..n_max")
        ->check(CLI::Range(1u, 1000000u))
        ->capture_default_str();
    add_common(s);

    CLI::App* v = app.add_subcommand("verify", "run the cross-check suite");
    v->add_option("--only", opt.only, "run a single check family");
    add_common(v);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // --help and --version exit cleanly
    }

    if (!opt.config.empty()) {
        CLI::App* sub = d->parsed() ? d : mo->parsed() ? mo : s->parsed() ? s : v;
        const int rc = apply_config(sub, opt.config);
        if (rc != 0) return rc;
    }

    if (d->parsed()) {
        if (!(opt.vsq_min < opt.vsq_max)) {
            std::cerr << "usage error: --vsq-min must be < --vsq-max\n";
            return 2;
        }
        return run_distribution(opt);
    }
    if (mo->parsed()) return run_moments(opt);
    if (s->parsed()) return run_singularities(opt);
    if (v->parsed()) return run_verify(opt);
    return 2;
}
