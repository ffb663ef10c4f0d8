#pragma once

// Closed-form zeta-regularized determinants of Friederichs Dirichlet Laplacians
// on constant-curvature cones. Convention: log det = -zeta'(0). Functions named
// logdet_* return log det; zeta_prime0_* return zeta'(0) itself.

#include <cmath>
#include <limits>
#include <string>

#include "conedet/barnes.hpp"
#include "conedet/constants.hpp"
#include "conedet/errors.hpp"
#include "conedet/gamma.hpp"
#include "conedet/quadrature.hpp"
#include "conedet/result.hpp"

namespace conedet {

/// Hyperbolic (curvature -1) cone of angle 2 pi a cut at geodesic radius eta.
struct ConeGeometry {
  double a;
  double eta;

  void validate() const {
    detail::require_positive(a, "a");
    detail::require_positive(eta, "eta");
  }
};

/// Unit disk |z| <= 1 with the metric 4a^2|z|^{2a-2}|dz|^2 / (1 + K|z|^{2a})^2.
struct CurvedDiskGeometry {
  double a;
  double K;

  void validate() const {
    detail::require_positive(a, "a");
    if (!(K > -1.0) || std::isinf(K)) throw domain_error("K must be a finite number > -1");
  }
};

namespace detail {

inline constexpr double eps = std::numeric_limits<double>::epsilon();

inline void require_order(int w) {
  if (w < 1 || w > max_orbifold_order)
    throw domain_error("w must be an integer in [1, " + std::to_string(max_orbifold_order) + "]");
}

// log(1 - e^{-x}), x > 0
inline double log1mexp(double x) {
  return x < constants::log_two ? std::log(-std::expm1(-x)) : std::log1p(-std::exp(-x));
}

// log tanh(eta/2) without cancellation at either end.
inline double log_tanh_half(double eta) { return log1mexp(eta) - std::log1p(std::exp(-eta)); }

// (1 - tanh^2(eta/2))^{-1} = (1 + cosh eta) / 2
inline double inv_sech2_half(double eta) { return 0.5 * (1.0 + std::cosh(eta)); }

// sum_{j=1}^{w-1} j log Gamma(j/w)
inline double weighted_log_gamma_sum(int w) {
  const double wd = w;
  double acc = 0.0;
  for (int j = 1; j < w; ++j) acc += j * log_gamma(j / wd);
  return acc;
}

inline double rounding_err(double magnitude) { return 16.0 * eps * (1.0 + std::fabs(magnitude)); }

}  // namespace detail

/// K = -tanh^2(eta/2): curvature of the unit-disk model isometric (after
/// rescaling) to the hyperbolic cone of radius eta.
inline double curvature_from_radius(double eta) {
  detail::require_positive(eta, "eta");
  const double t = std::tanh(0.5 * eta);
  return -t * t;
}

/// Inverse of curvature_from_radius: eta = 2 atanh(sqrt(|K|)) for -1 < K < 0.
inline double radius_from_curvature(double K) {
  if (!(K < 0.0 && K > -1.0)) throw domain_error("K must lie in (-1, 0)");
  return 2.0 * std::atanh(std::sqrt(-K));
}

inline double zeta0_spindle(double a) {
  detail::require_positive(a, "a");
  return (a + 1.0 / a) / 6.0 - 1.0;
}

/// zeta'(0) of the spindle Laplacian (zero mode excluded), curvature K > 0.
inline EvalResult zeta_prime0_spindle(double a, double K, const QuadratureConfig& quad = {}) {
  detail::require_positive(a, "a");
  detail::require_positive(K, "K");
  const auto zb = barnes_zeta_prime0({a, 1.0, 1.0}, quad);
  const double value = 4.0 * zb.value - 0.5 * a +
                       (a + 1.0 / a) / 3.0 * (std::log(a) - 0.5 * std::log(K)) + std::log(K);
  return {value, 4.0 * zb.abs_err + detail::rounding_err(value), "spindle"};
}

/// zeta'(0) of the Dirichlet Laplacian on the spherical cone |z| <= K^{-1/2a}
/// (half of the spindle).
inline EvalResult zeta_prime0_spherical_cone(double a, double K, const QuadratureConfig& quad = {}) {
  detail::require_positive(a, "a");
  detail::require_positive(K, "K");
  const auto zb = barnes_zeta_prime0({a, 1.0, 1.0}, quad);
  const double value = 2.0 * zb.value - 0.25 * a + (a + 3.0 + 1.0 / a) / 6.0 * std::log(a) -
                       (a + 1.0 / a) / 12.0 * std::log(K) + 0.5 * constants::log_two_pi;
  return {value, 2.0 * zb.abs_err + detail::rounding_err(value), "spherical-cone"};
}

/// zeta'(0) of the Dirichlet Laplacian on the unit disk with metric m_{a,K},
/// any K > -1; the only K dependence is 4a / (3(K+1)).
inline EvalResult zeta_prime0_unit_disk_cone(const CurvedDiskGeometry& g,
                                             const QuadratureConfig& quad = {}) {
  g.validate();
  const double a = g.a;
  const auto zb = barnes_zeta_prime0({a, 1.0, 1.0}, quad);
  const double value = 2.0 * zb.value - 11.0 / 12.0 * a + (a + 3.0 + 1.0 / a) / 6.0 * std::log(a) +
                       4.0 / 3.0 * a / (g.K + 1.0) + 0.5 * constants::log_two_pi;
  return {value, 2.0 * zb.abs_err + detail::rounding_err(value), "disk-cone"};
}

inline double zeta0_unit_disk_cone(double a) {
  detail::require_positive(a, "a");
  return (a + 1.0 / a) / 12.0;
}

/// log det of the Dirichlet Laplacian on the flat disk of radius r.
inline double logdet_flat_disk(double r) {
  detail::require_positive(r, "r");
  return -std::log(r) / 3.0 + constants::log_two / 3.0 - 2.0 * constants::riemann_zeta_prime_minus1 -
         5.0 / 12.0 - 0.5 * constants::log_two_pi;
}

/// log det on the geodesic disk of radius eta in the hyperbolic plane (cone angle 2 pi).
inline double logdet_poincare_cap(double eta) {
  detail::require_positive(eta, "eta");
  return -detail::log_tanh_half(eta) / 3.0 - 2.0 * constants::riemann_zeta_prime_minus1 +
         11.0 / 12.0 - 4.0 / 3.0 * detail::inv_sech2_half(eta) - 0.5 * constants::log_two_pi;
}

/// log det(C^{-1} Delta) = log det(Delta) - zeta(0) log C.
inline double rescale_logdet(double logdet, double zeta0, double C) {
  detail::require_positive(C, "C");
  return logdet - zeta0 * std::log(C);
}

/// log det of the Friederichs Dirichlet Laplacian on the hyperbolic cone
/// dr^2 + a^2 sinh^2 r dtheta^2, r <= eta.
inline EvalResult logdet_hyperbolic_cone(const ConeGeometry& g, const QuadratureConfig& quad = {}) {
  g.validate();
  const double a = g.a;
  const auto zb = barnes_zeta_prime0({a, 1.0, 1.0}, quad);
  const double value = -(a + 1.0 / a) / 6.0 * detail::log_tanh_half(g.eta) +
                       (3.0 - 8.0 * std::cosh(g.eta)) / 12.0 * a - 2.0 * zb.value -
                       (a + 3.0 + 1.0 / a) / 6.0 * std::log(a) - 0.5 * constants::log_two_pi;
  return {value, 2.0 * zb.abs_err + detail::rounding_err(value), "eq-2"};
}

/// The hyperbolic cone determinant at a = 1/w through Hurwitz special values.
inline EvalResult logdet_orbifold_cone(int w, double eta) {
  detail::require_order(w);
  detail::require_positive(eta, "eta");
  const double wd = w;
  const double value = -(wd + 1.0 / wd) / 6.0 * detail::log_tanh_half(eta) +
                       (3.0 - 8.0 * std::cosh(eta)) / (12.0 * wd) -
                       2.0 / wd * constants::riemann_zeta_prime_minus1 +
                       2.0 / wd * detail::weighted_log_gamma_sum(w) - wd / 2.0 * constants::log_two_pi +
                       (wd + 3.0 + 2.0 / wd) / 6.0 * std::log(wd);
  return {value, detail::rounding_err(value) * wd, "eq-4"};
}

/// Leading terms of logdet_orbifold_cone as eta -> 0+ (the remainder is O(eta^2)).
inline double small_eta_asymptotics(int w, double eta) {
  detail::require_order(w);
  detail::require_positive(eta, "eta");
  const double wd = w;
  const double lw = std::log(wd);
  return -(wd / 6.0 + 1.0 / (6.0 * wd)) * std::log(eta) -
         wd * (constants::log_two / 3.0 + 0.5 * constants::log_pi) -
         (2.0 * constants::riemann_zeta_prime_minus1 - 2.0 * detail::weighted_log_gamma_sum(w) +
          5.0 / 12.0 - constants::log_two / 6.0) /
             wd +
         0.5 * lw + wd * lw / 6.0 + lw / (3.0 * wd);
}

/// Small-radius expansion published by Freixas i Montplet and von Pippich,
/// reproduced verbatim for comparison. Known to be wrong beyond the log eta,
/// (1/2) log w and (w/6) log w terms.
inline double fp_asymptotics_reference(int w, double eta) {
  detail::require_order(w);
  detail::require_positive(eta, "eta");
  const double wd = w;
  const double lw = std::log(wd);
  return -(wd / 6.0 + 1.0 / (6.0 * wd)) * std::log(eta) -
         wd * (-2.0 * constants::riemann_zeta_prime_minus1 + 1.0 / 6.0 - constants::log_two / 6.0) -
         (5.0 / 12.0 - constants::log_two / 6.0 + constants::euler_gamma / 6.0) / wd + 0.5 * lw +
         wd * lw / 6.0 + lw / (6.0 * wd) + 0.25;
}

/// log of det(annulus, m_{a,K}) / det(annulus, |dz|^2) on K^{-1/2a} <= |z| <= 1.
/// Only derived for K > 1; smaller K is rejected.
inline double annulus_ratio_closed_form(double a, double K) {
  detail::require_positive(a, "a");
  if (!(K > 1.0) || std::isinf(K)) throw domain_error("annulus_ratio_closed_form: K must be > 1");
  return 2.0 / 3.0 * a - 4.0 / 3.0 * a / (K + 1.0) - (a - 1.0 / a) / 12.0 * std::log(K);
}

}  // namespace conedet
