#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "regge/distribution.hpp"
#include "regge/moments.hpp"
#include "regge/quadrature.hpp"

namespace regge::xcheck {

using Complex = std::complex<double>;

enum class TolerancePolicy { Absolute, Relative };

struct CheckReport {
    std::string name;
    Complex lhs{0.0, 0.0};
    Complex rhs{0.0, 0.0};
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tolerance = 0.0;
    TolerancePolicy policy = TolerancePolicy::Absolute;
    bool passed = false;
    // Informational reports record a quantity without gating the suite.
    bool informational = false;
    std::string note;
};

struct RunConfig {
    // Family names to run (see check_families()); empty means all.
    std::vector<std::string> only;
    // Multiplies every check tolerance; < 1 tightens the whole suite.
    double tol_scale = 1.0;
    std::uint64_t seed = 0x20240915u;
    int property_cases = 200;
};

// Each check pits a closed form against an independent oracle.
[[nodiscard]] CheckReport check_table_integral(double h,
                                               const quad::QuadratureSpec& spec = {});
[[nodiscard]] CheckReport check_generating_function(double z,
                                                    const quad::QuadratureSpec& spec = {});
[[nodiscard]] CheckReport check_radial_functional(const moments::ProbePolynomial& f,
                                                  double gamma,
                                                  const quad::QuadratureSpec& spec = {});
[[nodiscard]] std::vector<CheckReport> check_moment_routes(unsigned l_max,
                                                           std::span<const double> gammas);
[[nodiscard]] std::vector<CheckReport> check_linear_variant_bessel(unsigned l_max,
                                                                   double gamma);
// One report per peak position (compared in |A|, where the expected comb
// 2n resp. 2 gamma n lives) plus one for the height ordering.
[[nodiscard]] std::vector<CheckReport> check_peaks(double gamma);
[[nodiscard]] CheckReport check_measure_norm();
[[nodiscard]] CheckReport check_decay(moments::Variant variant, dist::Region region,
                                      double gamma);

// The full suite, sorted by check name. Oracle failures (for example
// quadrature non-convergence under a tightened tol_scale) surface as failed
// reports, never as exceptions.
[[nodiscard]] std::vector<CheckReport> run_all(const RunConfig& config = {});

[[nodiscard]] const std::vector<std::string>& check_families();
[[nodiscard]] bool known_family(std::string_view name);
[[nodiscard]] bool all_passed(std::span<const CheckReport> reports);

[[nodiscard]] std::string to_json(std::span<const CheckReport> reports);
[[nodiscard]] std::string to_text(std::span<const CheckReport> reports);

}  // namespace regge::xcheck
