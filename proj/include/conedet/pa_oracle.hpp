#pragma once

// Brute-force evaluation of the Polyakov-Alvarez anomaly
//   log det(e^{2 psi}|dz|^2) / det(|dz|^2)
//     = -1/(6 pi) (1/2 int |grad psi|^2 dA + oint k psi |dz|) - 1/(4 pi) oint d_n psi |dz|
// for radially symmetric potentials psi(|z|). The angular integration is done
// analytically; only the radial area integral needs quadrature.

#include <cmath>
#include <vector>

#include "conedet/constants.hpp"
#include "conedet/determinants.hpp"
#include "conedet/errors.hpp"
#include "conedet/quadrature.hpp"

namespace conedet {

/// psi(r) = log(2a) + (a - 1) log r - log(1 + K r^{2a}), so m_{a,K} = e^{2 psi}|dz|^2.
struct ConformalFactor {
  double a;
  double K;

  double denominator(double r) const { return 1.0 + K * std::pow(r, 2.0 * a); }

  double psi(double r) const {
    const double d = denominator(r);
    if (!(d > 0.0)) throw domain_error("conformal factor: 1 + K r^{2a} must be positive");
    return std::log(2.0 * a) + (a - 1.0) * std::log(r) - std::log(d);
  }

  double dpsi(double r) const {
    const double d = denominator(r);
    if (!(d > 0.0)) throw domain_error("conformal factor: 1 + K r^{2a} must be positive");
    return (a - 1.0) / r - 2.0 * a * K * std::pow(r, 2.0 * a - 1.0) / d;
  }
};

struct PAIntegralBreakdown {
  double area_term = 0.0;
  double boundary_curvature_terms = 0.0;
  double boundary_normal_terms = 0.0;
  double total = 0.0;
  double abs_err = 0.0;  // quadrature error of the area term
};

/// |grad psi|^2 = (d psi / dr)^2 for the potential of m_{a,K}.
inline double grad_psi_sq(double a, double K, double r) {
  detail::require_positive(a, "a");
  detail::require_positive(r, "r");
  const double d = ConformalFactor{a, K}.dpsi(r);
  return d * d;
}

namespace detail {

inline PAIntegralBreakdown assemble(double area, double curvature, double normal, double err) {
  PAIntegralBreakdown out;
  out.area_term = area;
  out.boundary_curvature_terms = curvature;
  out.boundary_normal_terms = normal;
  out.total = area + curvature + normal;
  out.abs_err = err;
  return out;
}

// -1/(6 pi) oint k psi |dz| on the circle |z| = R with constant geodesic curvature k.
inline double curvature_term(double k, double R, double psi_value) {
  return -(k * R) * psi_value / 3.0;
}

// -1/(4 pi) oint d_n psi |dz| on |z| = R, with d_n psi the outward normal derivative.
inline double normal_term(double R, double dn_psi) { return -0.5 * R * dn_psi; }

}  // namespace detail

/// Anomaly of m_{a,K} against the flat metric on the annulus K^{-1/2a} <= |z| <= 1, K > 1.
inline PAIntegralBreakdown pa_annulus_numeric(double a, double K, const QuadratureConfig& quad = {}) {
  detail::require_positive(a, "a");
  if (!(K > 1.0) || std::isinf(K)) throw domain_error("pa_annulus_numeric: K must be > 1");
  quad.validate();

  const ConformalFactor phi{a, K};
  const double inner = std::pow(K, -0.5 / a);

  const auto mesh = geometric_mesh(inner, 1.0, 16);
  const auto radial = integrate_adaptive(
      [&](double r) {
        const double d = phi.dpsi(r);
        return d * d * r;
      },
      std::span<const double>(mesh), quad.abs_tol, quad.max_subdivisions);
  const double area = -radial.value / 6.0;

  // Outer circle: k = 1, outward normal +r. Inner circle: k = -1/inner, outward normal -r.
  const double curvature = detail::curvature_term(1.0, 1.0, phi.psi(1.0)) +
                           detail::curvature_term(-1.0 / inner, inner, phi.psi(inner));
  const double normal = detail::normal_term(1.0, phi.dpsi(1.0)) +
                        detail::normal_term(inner, -phi.dpsi(inner));
  return detail::assemble(area, curvature, normal, radial.abs_err / 6.0);
}

/// Anomaly of the hyperbolic metric 4|dz|^2/(1-|z|^2)^2 against the flat metric on
/// |z| <= tanh(eta/2).
inline PAIntegralBreakdown pa_disk_numeric(double eta, const QuadratureConfig& quad = {}) {
  detail::require_positive(eta, "eta");
  quad.validate();
  const double T = std::tanh(0.5 * eta);
  const double one_minus_T2 = 2.0 / (1.0 + std::cosh(eta));

  // Cluster nodes towards the boundary where 1/(1 - r^2)^2 grows.
  std::vector<double> mesh = {0.0};
  const double gap = 1.0 - T;
  for (int k = 40; k >= 0; --k) {
    const double node = T - gap * std::ldexp(1.0, k);
    if (node > mesh.back() && node < T) mesh.push_back(node);
  }
  mesh.push_back(T);

  const auto radial = integrate_adaptive(
      [](double r) {
        const double d = (1.0 - r) * (1.0 + r);
        return 4.0 * r * r * r / (d * d);
      },
      std::span<const double>(mesh), quad.abs_tol, quad.max_subdivisions);
  const double area = -radial.value / 6.0;

  const double psi_T = constants::log_two - std::log(one_minus_T2);
  const double dpsi_T = 2.0 * T / one_minus_T2;
  const double curvature = detail::curvature_term(1.0 / T, T, psi_T);
  const double normal = detail::normal_term(T, dpsi_T);
  return detail::assemble(area, curvature, normal, radial.abs_err / 6.0);
}

}  // namespace conedet
