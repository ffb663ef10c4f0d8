#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "conedet/constants.hpp"
#include "conedet/errors.hpp"
#include "conedet/gamma.hpp"
#include "conedet/hurwitz.hpp"
#include "conedet/quadrature.hpp"
#include "conedet/result.hpp"

namespace conedet {

/// Parameters of zeta_B(s; a, b, x) = sum_{m,n>=0} (a m + b n + x)^-s.
struct BarnesArgs {
  double a;
  double b;
  double x;

  void validate() const {
    detail::require_positive(a, "a");
    detail::require_positive(b, "b");
    detail::require_positive(x, "x");
  }
};

inline constexpr int max_orbifold_order = 200;

/// Integrand -2 Im log Gamma((x + i b y)/a) / (e^{2 pi y} - 1) of the
/// zeta_B'(0) representation, continued to y = 0 by its limit.
inline double barnes_integrand(const BarnesArgs& args, double y) {
  const double p = args.x / args.a;
  if (y <= 0.0) return -(args.b / (constants::pi * args.a)) * digamma(p);
  const double q = args.b * y / args.a;
  return -2.0 * im_log_gamma(p, q) / std::expm1(2.0 * constants::pi * y);
}

/// Limit of barnes_integrand as y -> 0+.
inline double barnes_integrand_limit(const BarnesArgs& args) { return barnes_integrand(args, 0.0); }

namespace detail {

// Crude envelope of |Im log Gamma(p + iq)| from Stirling's formula.
inline double im_log_gamma_envelope(double p, double q) {
  const double modulus = std::hypot(p, q);
  return q * (std::fabs(std::log(modulus)) + 1.0) + (std::fabs(p - 0.5) + 1.0) * constants::pi / 2 + 1.0;
}

// Upper estimate of the integral of |integrand| over [y, inf).
inline double barnes_tail_bound(const BarnesArgs& args, double y) {
  const double p = args.x / args.a;
  const double q = args.b * y / args.a;
  const double decay = std::exp(-2.0 * constants::pi * y);
  // factor 2 over the leading term of the tail integral covers the slow growth of the envelope
  return 2.0 * 2.0 * im_log_gamma_envelope(p, q) * decay / (-std::expm1(-2.0 * constants::pi * y)) /
         (2.0 * constants::pi);
}

}  // namespace detail

/// d/ds zeta_B(s; a, b, x) at s = 0 from the Hurwitz-plus-integral representation.
inline EvalResult barnes_zeta_prime0(const BarnesArgs& args, const QuadratureConfig& quad = {}) {
  args.validate();
  quad.validate();
  const double a = args.a;
  const double b = args.b;
  const double p = args.x / a;
  const double la = std::log(a);

  const double h0 = hurwitz_zeta(0.0, p);
  const auto hm1 = detail::checked_hurwitz(-1.0, p, "barnes_zeta_prime0");
  const double ratio = a / b;

  const double t_log = (-0.5 * h0 + ratio * hm1.value - (b / a) / 12.0) * la;
  const double t_gamma = 0.5 * log_gamma(p);
  const double t_const = -0.25 * constants::log_two_pi;
  const double t_h = -ratio * hm1.value;
  const double t_hd = -ratio * hm1.sderiv;

  // Smallest y (on a half-unit grid) whose tail falls below a tenth of the tolerance.
  double y_max = 0.5;
  while (y_max < quad.y_max_cap && detail::barnes_tail_bound(args, y_max) >= quad.abs_tol / 10.0)
    y_max += 0.5;
  y_max = std::min(y_max, quad.y_max_cap);
  const double tail = detail::barnes_tail_bound(args, y_max);

  // A few fixed breakpoints near the origin where the integrand varies on the scale a / b.
  std::vector<double> mesh = {0.0};
  for (double node : {0.125, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0})
    if (node < y_max) mesh.push_back(node);
  mesh.push_back(y_max);

  const auto integral = integrate_adaptive([&](double y) { return barnes_integrand(args, y); },
                                           std::span<const double>(mesh), quad.abs_tol,
                                           quad.max_subdivisions);

  const double value = t_log + t_gamma + t_const + t_h + t_hd + integral.value;
  const double magnitude = std::fabs(t_log) + std::fabs(t_gamma) + std::fabs(t_const) +
                           std::fabs(t_h) + std::fabs(t_hd) + std::fabs(integral.value);
  const double special_err = 1e-13 + 8.0 * std::numeric_limits<double>::epsilon() * magnitude;
  return {value, integral.abs_err + tail + special_err, "barnes-integral"};
}

/// zeta_B'(0; 1/w, 1, 1) in closed form through Hurwitz special values; no quadrature.
inline double barnes_zeta_prime0_orbifold(int w) {
  if (w < 1 || w > max_orbifold_order)
    throw domain_error("w must be an integer in [1, " + std::to_string(max_orbifold_order) + "]");
  const double wd = w;
  double weighted = 0.0;
  for (int j = 1; j < w; ++j) weighted += j * log_gamma(j / wd);
  return constants::riemann_zeta_prime_minus1 / wd - std::log(wd) / (12.0 * wd) - weighted / wd +
         (wd - 1.0) / 4.0 * constants::log_two_pi;
}

}  // namespace conedet
