// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace w2a {

struct IntegrationResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = false;
  int intervals = 0;

  operator double() const { return value; }
};

namespace detail {

// 15-point Kronrod nodes/weights on [-1,1] and the embedded 7-point Gauss
// weights (nodes are interior, so integrable endpoint singularities are
// never sampled directly).
inline constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class F>
inline void gauss_kronrod_15(const F& f, double lo, double hi, double& value,
                             double& error) {
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kKronrodNodes[i]);
    fv[14 - i] = f(c + h * kKronrodNodes[i]);
  }
  fv[7] = f(c);
  double kronrod = kKronrodWeights[7] * fv[7];
  double gauss = kGaussWeights[3] * fv[7];
  for (int i = 0; i < 7; ++i) {
    kronrod += kKronrodWeights[i] * (fv[i] + fv[14 - i]);
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * (fv[i] + fv[14 - i]);
  }
  value = kronrod * h;
  error = std::fabs((kronrod - gauss) * h);
}

}  // namespace detail

/// Globally adaptive quadrature of f over [lo, hi] with absolute
/// tolerance `tol`: bisect the interval with the worst Gauss-Kronrod
/// error estimate until the summed estimate fits. Non-convergence within
/// the interval budget is reported through the flag, together with the
/// best estimate so far.
template <class F>
IntegrationResult integrate(F&& f, double lo, double hi, double tol = 1e-10,
                            int max_intervals = 4000) {
  if (!(lo <= hi)) throw std::domain_error("integrate: requires lo <= hi");
  IntegrationResult result;
  if (lo == hi) {
    result.converged = true;
    return result;
  }

  struct Interval {
    double lo, hi, value, error;
  };
  std::vector<Interval> heap;
  heap.reserve(256);
  auto worse = [](const Interval& a, const Interval& b) {
    return a.error < b.error;
  };

  Interval whole{lo, hi, 0.0, 0.0};
  detail::gauss_kronrod_15(f, lo, hi, whole.value, whole.error);
  heap.push_back(whole);

  double total_value = whole.value;
  double total_error = whole.error;
  int used = 1;
  while (total_error > tol && used < max_intervals) {
    std::pop_heap(heap.begin(), heap.end(), worse);
    const Interval top = heap.back();
    heap.pop_back();
    total_value -= top.value;
    total_error -= top.error;

    const double mid = 0.5 * (top.lo + top.hi);
    for (const auto& [l, h] : {std::pair{top.lo, mid}, std::pair{mid, top.hi}}) {
      Interval part{l, h, 0.0, 0.0};
      detail::gauss_kronrod_15(f, l, h, part.value, part.error);
      total_value += part.value;
      total_error += part.error;
      heap.push_back(part);
      std::push_heap(heap.begin(), heap.end(), worse);
    }
    ++used;
  }

  // Summing the per-interval values front to back keeps the result
  // independent of the refinement history only up to rounding; recompute
  // from the heap in sorted order for a stable digest.
  std::sort(heap.begin(), heap.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  double value = 0.0;
  for (const auto& iv : heap) value += iv.value;

  result.value = value;
  result.error_estimate = total_error;
  result.converged = total_error <= tol;
  result.intervals = used;
  return result;
}

}  // namespace w2a
