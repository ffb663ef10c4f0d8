#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "conedet/constants.hpp"
#include "conedet/errors.hpp"

namespace conedet {

namespace detail {

// B_{2k} / (2k (2k-1)), k = 1..10: Stirling series for log Gamma.
inline constexpr std::array<double, 10> stirling_coeffs = {
    1.0 / 12.0,         -1.0 / 360.0,        1.0 / 1260.0,
    -1.0 / 1680.0,      1.0 / 1188.0,        -691.0 / 360360.0,
    1.0 / 156.0,        -3617.0 / 122400.0,  43867.0 / 244188.0,
    -174611.0 / 125400.0};

// B_{2k} / (2k), k = 1..7: asymptotic series for the digamma function.
inline constexpr std::array<double, 7> digamma_coeffs = {
    1.0 / 12.0,  -1.0 / 120.0,      1.0 / 252.0, -1.0 / 240.0,
    1.0 / 132.0, -691.0 / 32760.0,  1.0 / 12.0};

// Arguments are shifted up to this real part before the asymptotic series is used.
inline constexpr double asymptotic_threshold = 10.0;

template <typename T>
T stirling_tail(T z) {
  const T inv = T(1) / z;
  const T inv2 = inv * inv;
  T acc = T(0);
  for (auto it = stirling_coeffs.rbegin(); it != stirling_coeffs.rend(); ++it)
    acc = acc * inv2 + T(*it);
  return acc * inv;
}

}  // namespace detail

/// log Gamma(x) for real x > 0.
inline double log_gamma(double x) {
  if (!(x > 0.0) || std::isinf(x))
    throw domain_error("log_gamma: argument must be positive");
  double prod = 1.0;
  while (x < detail::asymptotic_threshold) {
    prod *= x;
    x += 1.0;
  }
  const double shift = std::log(prod);
  return (x - 0.5) * std::log(x) - x + 0.5 * constants::log_two_pi +
         detail::stirling_tail(x) - shift;
}

/// Imaginary part of the continuous log Gamma branch at p + iq, p > 0.
/// Odd in q bit for bit.
inline double im_log_gamma(double p, double q) {
  if (!(p > 0.0) || std::isinf(p))
    throw domain_error("im_log_gamma: real part must be positive");
  if (q == 0.0) return 0.0;
  const bool negative = q < 0.0;
  const double aq = std::fabs(q);

  double arg_sum = 0.0;
  while (p < detail::asymptotic_threshold) {
    arg_sum += std::atan2(aq, p);
    p += 1.0;
  }
  const std::complex<double> z(p, aq);
  const std::complex<double> main = (z - 0.5) * std::log(z) - z;
  const double result = main.imag() + detail::stirling_tail(z).imag() - arg_sum;
  return negative ? -result : result;
}

/// psi(x) = d/dx log Gamma(x) for x > 0.
inline double digamma(double x) {
  if (!(x > 0.0) || std::isinf(x))
    throw domain_error("digamma: argument must be positive");
  double acc = 0.0;
  while (x < detail::asymptotic_threshold) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  double series = 0.0;
  for (auto it = detail::digamma_coeffs.rbegin(); it != detail::digamma_coeffs.rend(); ++it)
    series = series * inv2 + *it;
  return acc + std::log(x) - 0.5 / x - series * inv2;
}

}  // namespace conedet
