#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "conedet/errors.hpp"

namespace conedet {

/// Controls for the semi-infinite and finite adaptive integrals.
struct QuadratureConfig {
  double abs_tol = 1e-12;
  double y_max_cap = 40.0;  // hard truncation of a semi-infinite integration variable
  int max_subdivisions = 4000;

  void validate() const {
    if (!(abs_tol > 0.0)) throw domain_error("quadrature: abs_tol must be positive");
    if (!(y_max_cap > 0.0)) throw domain_error("quadrature: y_max_cap must be positive");
    if (max_subdivisions < 1) throw domain_error("quadrature: max_subdivisions must be >= 1");
  }
};

struct QuadratureResult {
  double value = 0.0;
  double abs_err = 0.0;
  int subdivisions = 0;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15 tables).
inline constexpr std::array<double, 8> gk15_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr std::array<double, 8> gk15_kronrod_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for nodes 1, 3, 5 and the centre.
inline constexpr std::array<double, 4> gk15_gauss_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double lo;
  double hi;
  double value;
  double err;
  double abs_value;  // integral of |f|, used for the round-off floor

  bool operator<(const Segment& other) const { return err < other.err; }
};

template <typename F>
Segment gauss_kronrod15(F& f, double lo, double hi) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(centre);
  double kronrod = fc * gk15_kronrod_weights[7];
  double gauss = fc * gk15_gauss_weights[3];
  double abs_sum = std::fabs(fc) * gk15_kronrod_weights[7];
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * gk15_nodes[i];
    const double f1 = f(centre - dx);
    const double f2 = f(centre + dx);
    kronrod += gk15_kronrod_weights[i] * (f1 + f2);
    abs_sum += gk15_kronrod_weights[i] * (std::fabs(f1) + std::fabs(f2));
    if (i % 2 == 1) gauss += gk15_gauss_weights[i / 2] * (f1 + f2);
  }
  const double value = kronrod * half;
  return {lo, hi, value, std::fabs((kronrod - gauss) * half), abs_sum * std::fabs(half)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod integration of f over the mesh given by
/// `breakpoints` (sorted, at least two entries). The interval with the largest
/// error estimate is bisected until the summed estimate drops below abs_tol or
/// a round-off floor of 64 eps * integral of |f|, whichever is larger.
/// Throws quadrature_error once `max_subdivisions` bisections have been spent.
template <typename F>
QuadratureResult integrate_adaptive(F&& f, std::span<const double> breakpoints, double abs_tol,
                                    int max_subdivisions) {
  if (breakpoints.size() < 2) throw domain_error("integrate_adaptive: need at least two breakpoints");
  if (!(abs_tol > 0.0)) throw domain_error("integrate_adaptive: abs_tol must be positive");

  std::priority_queue<detail::Segment> heap;
  double total = 0.0;
  double total_err = 0.0;
  double total_abs = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i] < breakpoints[i + 1]))
      throw domain_error("integrate_adaptive: breakpoints must be strictly increasing");
    auto seg = detail::gauss_kronrod15(f, breakpoints[i], breakpoints[i + 1]);
    total += seg.value;
    total_err += seg.err;
    total_abs += seg.abs_value;
    heap.push(seg);
  }

  constexpr double eps = std::numeric_limits<double>::epsilon();
  int subdivisions = 0;
  auto target = [&] { return std::max(abs_tol, 64.0 * eps * total_abs); };
  while (total_err > target()) {
    if (subdivisions >= max_subdivisions)
      throw quadrature_error("adaptive quadrature did not reach tolerance " +
                             std::to_string(abs_tol) + " within " +
                             std::to_string(max_subdivisions) + " subdivisions (estimate " +
                             std::to_string(total_err) + ")");
    const auto worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    auto left = detail::gauss_kronrod15(f, worst.lo, mid);
    auto right = detail::gauss_kronrod15(f, mid, worst.hi);
    total += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    total_abs += left.abs_value + right.abs_value - worst.abs_value;
    heap.push(left);
    heap.push(right);
    ++subdivisions;
  }

  // Re-sum from the leaves so the running update does not leak round-off.
  QuadratureResult out;
  out.subdivisions = subdivisions;
  std::vector<detail::Segment> leaves;
  leaves.reserve(heap.size());
  while (!heap.empty()) {
    leaves.push_back(heap.top());
    heap.pop();
  }
  std::sort(leaves.begin(), leaves.end(),
            [](const auto& l, const auto& r) { return l.lo < r.lo; });
  for (const auto& s : leaves) {
    out.value += s.value;
    out.abs_err += s.err;
  }
  return out;
}

template <typename F>
QuadratureResult integrate_adaptive(F&& f, double lo, double hi, double abs_tol,
                                    int max_subdivisions) {
  const std::array<double, 2> mesh = {lo, hi};
  return integrate_adaptive(std::forward<F>(f), std::span<const double>(mesh), abs_tol,
                            max_subdivisions);
}

/// `count` + 1 geometrically spaced nodes from lo to hi (0 < lo < hi).
inline std::vector<double> geometric_mesh(double lo, double hi, int count) {
  if (!(lo > 0.0 && lo < hi) || count < 1) throw domain_error("geometric_mesh: need 0 < lo < hi");
  std::vector<double> mesh(static_cast<std::size_t>(count) + 1);
  const double ratio = std::log(hi / lo);
  for (int i = 0; i <= count; ++i) mesh[static_cast<std::size_t>(i)] = lo * std::exp(ratio * i / count);
  mesh.front() = lo;
  mesh.back() = hi;
  return mesh;
}

}  // namespace conedet
