#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace conedet {

/// Argument outside the domain of a formula (non-positive radius, w < 1, ...).
class domain_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Evaluation at a pole, e.g. the Hurwitz zeta function at s = 1.
class pole_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Adaptive quadrature ran out of subdivisions before reaching its tolerance.
class quadrature_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// Inputs below this are treated as zero.
inline constexpr double positive_floor = 1e-300;

inline void require_positive(double v, const char* name) {
  if (!(v > positive_floor) || v == std::numeric_limits<double>::infinity())
    throw domain_error(std::string(name) + " must be a finite positive number");
}

}  // namespace detail
}  // namespace conedet
