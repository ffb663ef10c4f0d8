#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "conedet/constants.hpp"
#include "conedet/errors.hpp"

namespace conedet {

/// Value and s-derivative of a Hurwitz zeta evaluation.
struct HurwitzValue {
  double value;
  double sderiv;
};

namespace detail {

// B_{2j} / (2j)!, j = 1..20.
inline constexpr std::array<double, 20> bernoulli_over_factorial = {
    8.33333333333333287e-02,  -1.38888888888888894e-03, 3.30687830687830710e-05,
    -8.26719576719576754e-07, 2.08767569878681002e-08,  -5.28419013868749322e-10,
    1.33825365306846789e-11,  -3.38968029632258272e-13, 8.58606205627784517e-15,
    -2.17486869855806192e-16, 5.50900282836022953e-18,  -1.39544646858125223e-19,
    3.53470703962946728e-21,  -8.95351742703754628e-23, 2.26795245233768293e-24,
    -5.74479066887220246e-26, 1.45517247561486496e-27,  -3.68599494066531029e-29,
    9.33673425709504507e-31,  -2.36502241570062995e-32};

// The Euler-Maclaurin tail is evaluated at N + x >= base. For s < 0 the explicit
// terms grow like (N + x)^-s and cancel against the integral term, so the base is lowered.
inline constexpr double hurwitz_base = 12.0;
inline constexpr double hurwitz_base_negative_s = 7.0;

// Euler-Maclaurin for zeta_H(s, x) after N explicit terms, differentiated term by
// term in s:
//   sum_{k<N} (k+x)^-s + z^(1-s)/(s-1) + z^-s/2 + sum_j B_2j/(2j)! (s)_{2j-1} z^(-s-2j+1)
// with z = N + x and (s)_n the rising factorial.
inline HurwitzValue hurwitz_euler_maclaurin(double s, double x) {
  const double base = s < 0.0 ? hurwitz_base_negative_s : hurwitz_base;
  const auto n_terms = x < base ? static_cast<std::size_t>(std::ceil(base - x)) : std::size_t{0};

  double value = 0.0;
  double sderiv = 0.0;
  for (std::size_t k = 0; k < n_terms; ++k) {
    const double lb = std::log(static_cast<double>(k) + x);
    const double term = std::exp(-s * lb);
    value += term;
    sderiv -= lb * term;
  }

  const double z = static_cast<double>(n_terms) + x;
  const double lz = std::log(z);
  const double zs = std::exp(-s * lz);

  const double integral = z * zs / (s - 1.0);
  value += integral + 0.5 * zs;
  sderiv += -lz * integral - integral / (s - 1.0) - 0.5 * lz * zs;

  // rising(j) = s (s+1) ... (s+2j-2) and its s-derivative
  double rising = s;
  double rising_d = 1.0;
  double zpow = zs / z;  // z^(-s-2j+1) at j = 1
  const double inv_z2 = 1.0 / (z * z);
  for (std::size_t j = 1; j <= bernoulli_over_factorial.size(); ++j) {
    const double c = bernoulli_over_factorial[j - 1];
    const double term = c * rising * zpow;
    const double dterm = c * (rising_d - lz * rising) * zpow;
    value += term;
    sderiv += dterm;
    if (rising == 0.0 && rising_d == 0.0) break;
    if (j > 2 && std::fabs(term) <= 1e-18 * std::fabs(value) &&
        std::fabs(dterm) <= 1e-18 * std::fabs(sderiv))
      break;

    const double a = s + static_cast<double>(2 * j - 1);
    const double b = s + static_cast<double>(2 * j);
    const double f = a * b;
    const double fd = a + b;
    rising_d = rising_d * f + rising * fd;
    rising *= f;
    zpow *= inv_z2;
  }
  return {value, sderiv};
}

inline HurwitzValue checked_hurwitz(double s, double x, const char* who) {
  if (!(x > 0.0) || std::isinf(x))
    throw domain_error(std::string(who) + ": x must be positive");
  if (s == 1.0) throw pole_error(std::string(who) + ": pole at s = 1");
  return hurwitz_euler_maclaurin(s, x);
}

}  // namespace detail

/// Analytic continuation of zeta_H(s, x) = sum_{m>=0} (m + x)^-s, s != 1.
inline double hurwitz_zeta(double s, double x) {
  return detail::checked_hurwitz(s, x, "hurwitz_zeta").value;
}

/// d/ds zeta_H(s, x). Accurate to ~1e-12 for s in {0, -1}; best effort elsewhere.
inline double hurwitz_zeta_sderiv(double s, double x) {
  return detail::checked_hurwitz(s, x, "hurwitz_zeta_sderiv").sderiv;
}

inline constexpr double riemann_zeta_prime_minus1() {
  return constants::riemann_zeta_prime_minus1;
}

}  // namespace conedet
