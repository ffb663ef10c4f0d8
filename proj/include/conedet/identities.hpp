#pragma once

// Cross-checks between the closed forms, the Barnes integral representation and
// the Polyakov-Alvarez quadrature oracle.

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "conedet/barnes.hpp"
#include "conedet/determinants.hpp"
#include "conedet/hurwitz.hpp"
#include "conedet/pa_oracle.hpp"

namespace conedet {

struct IdentityReport {
  std::string identity_name;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_diff = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// Parameter grids the identities are checked on.
struct IdentityGrids {
  std::vector<double> cone_angles = {0.2, 0.5, 1.0, 2.0, 5.0};
  // Probed at K = +-1e-8, where the exact difference is (8a/3) 1e-8.
  std::vector<double> continuity_angles = {0.2, 0.5, 1.0, 2.0, 3.0};
  std::vector<double> radii = {0.1, 0.5, 1.0, 2.0, 5.0};
  std::vector<double> orbifold_radii = {0.1, 0.5, 1.0, 2.0, 3.0, 5.0};
  int max_order = 12;
  int max_asymptotic_order = 5;
  std::vector<double> spindle_angles = {0.2, 0.5, 1.0, 2.0, 5.0};
  std::vector<double> spindle_curvatures = {0.5, 1.0, 2.0};
  std::vector<double> annulus_angles = {0.5, 1.0, 2.0};
  std::vector<double> annulus_curvatures = {2.0, 5.0, 10.0};
  std::vector<double> disk_radii = {0.5, 1.0, 3.0};
  std::vector<double> hurwitz_points = {0.1, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 2.5, 3.0};
};

/// The formulas under test. verify_identities() is parameterized on this so a
/// deliberately broken variant can be checked to fail.
struct reference_formulas {
  static double barnes_prime0(const BarnesArgs& args, const QuadratureConfig& q) {
    return barnes_zeta_prime0(args, q).value;
  }
  static double barnes_prime0_orbifold(int w) { return barnes_zeta_prime0_orbifold(w); }
  static double logdet_hyperbolic_cone(double a, double eta, const QuadratureConfig& q) {
    return conedet::logdet_hyperbolic_cone({a, eta}, q).value;
  }
  static double logdet_orbifold_cone(int w, double eta) {
    return conedet::logdet_orbifold_cone(w, eta).value;
  }
  static double logdet_poincare_cap(double eta) { return conedet::logdet_poincare_cap(eta); }
  static double logdet_flat_disk(double r) { return conedet::logdet_flat_disk(r); }
  static double zeta_prime0_unit_disk_cone(double a, double K, const QuadratureConfig& q) {
    return conedet::zeta_prime0_unit_disk_cone({a, K}, q).value;
  }
  static double zeta0_unit_disk_cone(double a) { return conedet::zeta0_unit_disk_cone(a); }
  static double zeta_prime0_spindle(double a, double K, const QuadratureConfig& q) {
    return conedet::zeta_prime0_spindle(a, K, q).value;
  }
  static double zeta0_spindle(double a) { return conedet::zeta0_spindle(a); }
  static double zeta_prime0_spherical_cone(double a, double K, const QuadratureConfig& q) {
    return conedet::zeta_prime0_spherical_cone(a, K, q).value;
  }
  static double annulus_ratio(double a, double K) { return annulus_ratio_closed_form(a, K); }
  static double small_eta_asymptotics(int w, double eta) {
    return conedet::small_eta_asymptotics(w, eta);
  }
  static double fp_asymptotics(int w, double eta) { return fp_asymptotics_reference(w, eta); }
};

namespace detail {

// How an identity's tolerance combines with the caller's global one.
enum class TolerancePolicy {
  tighten,  // min(global, own): exact algebraic identities
  fixed,    // own only: quadrature oracles, bounds and ratio windows
};

class ReportBuilder {
public:
  ReportBuilder(std::string name, double own_tol, TolerancePolicy policy, double global_tol)
      : report_{std::move(name), 0.0, 0.0, -1.0,
                policy == TolerancePolicy::tighten ? std::min(global_tol, own_tol) : own_tol,
                false} {}

  // Keeps the worst (largest |lhs - rhs|) sample.
  void add(double lhs, double rhs) {
    double diff = std::fabs(lhs - rhs);
    if (std::isnan(diff)) diff = std::numeric_limits<double>::infinity();
    if (diff > report_.abs_diff) {
      report_.lhs = lhs;
      report_.rhs = rhs;
      report_.abs_diff = diff;
    }
  }

  IdentityReport finish() {
    report_.abs_diff = std::max(report_.abs_diff, 0.0);
    report_.passed = report_.abs_diff <= report_.tolerance;
    return report_;
  }

private:
  IdentityReport report_;
};

// Runs one identity; numerical failures become a failed report instead of propagating.
inline IdentityReport run_identity(const std::string& name, double own_tol, TolerancePolicy policy,
                                   double global_tol, const std::function<void(ReportBuilder&)>& body) {
  ReportBuilder builder(name, own_tol, policy, global_tol);
  try {
    body(builder);
  } catch (const std::exception&) {
    builder.add(std::numeric_limits<double>::infinity(), 0.0);
  }
  return builder.finish();
}

}  // namespace detail

/// Evaluates every cross-formula identity and returns one report per identity,
/// sorted by name. Algebraic identities are held to min(tol, own tolerance);
/// quadrature-oracle agreement, the K-continuity probe, the asymptotic residual
/// bound and the residual ratio window keep their own fixed tolerances.
template <typename Formulas = reference_formulas>
std::vector<IdentityReport> verify_identities(double tol, const IdentityGrids& grids = {},
                                              const QuadratureConfig& quad = {}) {
  if (!(tol > 0.0)) throw domain_error("verify_identities: tol must be positive");
  using F = Formulas;
  using detail::TolerancePolicy;
  std::vector<IdentityReport> out;
  auto run = [&](const std::string& name, double own, TolerancePolicy policy, auto&& body) {
    out.push_back(detail::run_identity(name, own, policy, tol, body));
  };

  run("a1_closed_form", 1e-9, TolerancePolicy::tighten, [&](detail::ReportBuilder& r) {
    for (double eta : grids.radii)
      r.add(F::logdet_hyperbolic_cone(1.0, eta, quad), F::logdet_poincare_cap(eta));
  });

  run("a1_cosh_arithmetic", 0.0, TolerancePolicy::fixed, [&](detail::ReportBuilder& r) {
    // (3 - 8 cosh eta)/12 = 11/12 - (2/3)(1 + cosh eta) to one ulp; reported as ulps over one.
    for (double eta : grids.radii) {
      const double c = std::cosh(eta);
      const double lhs = (3.0 - 8.0 * c) / 12.0;
      const double rhs = 11.0 / 12.0 - 2.0 / 3.0 * (1.0 + c);
      const double ulp = std::nextafter(std::fabs(lhs), HUGE_VAL) - std::fabs(lhs);
      const double excess = std::max(0.0, std::fabs(lhs - rhs) / ulp - 1.0);
      r.add(excess, 0.0);
    }
  });

  run("annulus_area_antiderivative", 1e-8, TolerancePolicy::fixed, [&](detail::ReportBuilder& r) {
    for (double a : grids.annulus_angles)
      for (double K : grids.annulus_curvatures) {
        const double closed = -(a - 1.0) * (a - 1.0) / (12.0 * a) * std::log(K) -
                              std::log1p(K) / 3.0 - a / (K + 1.0) / 3.0 + a / 6.0 +
                              constants::log_two / 3.0;
        r.add(pa_annulus_numeric(a, K, quad).area_term, closed);
      }
  });

  run("annulus_pa_dual", 1e-7, TolerancePolicy::fixed, [&](detail::ReportBuilder& r) {
    for (double a : grids.annulus_angles)
      for (double K : grids.annulus_curvatures)
        r.add(pa_annulus_numeric(a, K, quad).total, F::annulus_ratio(a, K));
  });

  run("asymptotic_residual_bound", 1e-4, TolerancePolicy::fixed, [&](detail::ReportBuilder& r) {
    for (int w = 1; w <= grids.max_asymptotic_order; ++w)
      r.add(F::logdet_orbifold_cone(w, 1e-3) - F::small_eta_asymptotics(w, 1e-3), 0.0);
  });

  run("asymptotic_residual_ratio", 0.05, TolerancePolicy::fixed, [&](detail::ReportBuilder& r) {
    // O(eta^2) remainder: halving eta divides the residual by four, window [0.2, 0.3].
    for (int w = 1; w <= grids.max_asymptotic_order; ++w) {
      const double r1 = F::logdet_orbifold_cone(w, 1e-3) - F::small_eta_asymptotics(w, 1e-3);
      const double r2 = F::logdet_orbifold_cone(w, 2e-3) - F::small_eta_asymptotics(w, 2e-3);
      r.add(r1 / r2, 0.25);
    }
  });

  run("barnes_bridge", 1e-8, TolerancePolicy::tighten, [&](detail::ReportBuilder& r) {
    for (int w = 1; w <= grids.max_order; ++w)
      r.add(F::barnes_prime0({1.0 / w, 1.0, 1.0}, quad), F::barnes_prime0_orbifold(w));
  });

  run("bfk_disk_composition", 1e-9, TolerancePolicy::tighten, [&](detail::ReportBuilder& r) {
    // Glue the spherical cone |z| <= K^{-1/2a} to the annulus, relative to the flat disk.
    for (double a : grids.annulus_angles)
      for (double K : grids.annulus_curvatures) {
        const double inner_ratio = F::logdet_flat_disk(1.0) - F::zeta_prime0_spherical_cone(a, K, quad) -
                                   F::logdet_flat_disk(std::pow(K, -0.5 / a));
        r.add(inner_ratio + F::annulus_ratio(a, K), -F::zeta_prime0_unit_disk_cone(a, K, quad));
      }
  });

  run("bfk_spindle", 1e-9, TolerancePolicy::tighten, [&](detail::ReportBuilder& r) {
    for (double a : grids.spindle_angles)
      for (double K : grids.spindle_curvatures)
        r.add(-F::zeta_prime0_spindle(a, K, quad),
              std::log(4.0 * constants::pi * a / K) - 2.0 * F::zeta_prime0_spherical_cone(a, K, quad) -
                  constants::log_two);
  });

  run("disk_cone_rescaling", 1e-9, TolerancePolicy::tighten, [&](detail::ReportBuilder& r) {
    // Rescale the unit-disk cone of curvature K = -tanh^2(eta/2) to curvature -1.
    for (double a : grids.cone_angles)
      for (double eta : grids.radii) {
        const double K = curvature_from_radius(eta);
        r.add(F::logdet_hyperbolic_cone(a, eta, quad),
              -F::zeta_prime0_unit_disk_cone(a, K, quad) -
                  F::zeta0_unit_disk_cone(a) * std::log(std::fabs(K)));
      }
  });

  run("flat_limit", 1e-9, TolerancePolicy::tighten, [&](detail::ReportBuilder& r) {
    r.add(F::zeta_prime0_unit_disk_cone(1.0, 0.0, quad), -F::logdet_flat_disk(2.0));
  });

  run("fp_discrepancy_constant", 1e-10, TolerancePolicy::tighten, [&](detail::ReportBuilder& r) {
    for (int w = 1; w <= grids.max_asymptotic_order; ++w) {
      const double d1 = F::fp_asymptotics(w, 1e-3) - F::small_eta_asymptotics(w, 1e-3);
      const double d2 = F::fp_asymptotics(w, 0.5) - F::small_eta_asymptotics(w, 0.5);
      r.add(d1, d2);
    }
  });

  run("hurwitz_special_values", 1e-10, TolerancePolicy::tighten, [&](detail::ReportBuilder& r) {
    for (double x : grids.hurwitz_points) {
      r.add(hurwitz_zeta(0.0, x), 0.5 - x);
      r.add(hurwitz_zeta_sderiv(0.0, x), log_gamma(x) - 0.5 * constants::log_two_pi);
    }
  });

  run("k_continuity", 1e-7, TolerancePolicy::fixed, [&](detail::ReportBuilder& r) {
    for (double a : grids.continuity_angles)
      r.add(F::zeta_prime0_unit_disk_cone(a, 1e-8, quad), F::zeta_prime0_unit_disk_cone(a, -1e-8, quad));
  });

  run("orbifold_equality", 1e-8, TolerancePolicy::tighten, [&](detail::ReportBuilder& r) {
    for (int w = 1; w <= grids.max_order; ++w)
      for (double eta : grids.orbifold_radii)
        r.add(F::logdet_hyperbolic_cone(1.0 / w, eta, quad), F::logdet_orbifold_cone(w, eta));
  });

  run("pa_disk", 1e-7, TolerancePolicy::fixed, [&](detail::ReportBuilder& r) {
    for (double eta : grids.disk_radii)
      r.add(pa_disk_numeric(eta, quad).total,
            F::logdet_poincare_cap(eta) - F::logdet_flat_disk(std::tanh(0.5 * eta)));
  });

  run("spindle_rescaling", 1e-9, TolerancePolicy::tighten, [&](detail::ReportBuilder& r) {
    for (double a : grids.spindle_angles)
      for (double K : grids.spindle_curvatures)
        r.add(F::zeta_prime0_spindle(a, K, quad),
              F::zeta_prime0_spindle(a, 1.0, quad) - F::zeta0_spindle(a) * std::log(K));
  });

  run("zeta0_symmetry", 0.0, TolerancePolicy::fixed, [&](detail::ReportBuilder& r) {
    for (double a : grids.cone_angles) {
      r.add(F::zeta0_unit_disk_cone(a), F::zeta0_unit_disk_cone(1.0 / a));
      r.add(F::zeta0_spindle(a), F::zeta0_spindle(1.0 / a));
    }
  });

  run("zeta_r_prime_consistency", 1e-11, TolerancePolicy::tighten, [&](detail::ReportBuilder& r) {
    r.add(hurwitz_zeta_sderiv(-1.0, 1.0), riemann_zeta_prime_minus1());
  });

  std::sort(out.begin(), out.end(),
            [](const auto& l, const auto& r) { return l.identity_name < r.identity_name; });
  return out;
}

inline bool all_passed(std::span<const IdentityReport> reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
}

}  // namespace conedet
