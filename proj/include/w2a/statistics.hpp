// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace w2a {

/// Fixed-range, equal-width histogram. Samples outside [lo, hi] are
/// dropped; densities are normalized over the kept samples.
struct Histogram {
  double lo = 0.0;
  double hi = 1.0;
  std::vector<double> counts;
  std::size_t n_kept = 0;
  std::size_t n_seen = 0;

  Histogram() = default;
  Histogram(double lo_, double hi_, int bins) : lo(lo_), hi(hi_), counts(bins, 0.0) {
    if (!(hi_ > lo_) || bins < 1)
      throw std::invalid_argument("Histogram: bad range or bin count");
  }

  int bins() const { return static_cast<int>(counts.size()); }
  double bin_width() const { return (hi - lo) / bins(); }
  double center(int b) const { return lo + (b + 0.5) * bin_width(); }
  double edge(int b) const { return lo + b * bin_width(); }

  void add(double x) {
    ++n_seen;
    if (x < lo || x > hi) return;
    int b = std::min(static_cast<int>((x - lo) / bin_width()), bins() - 1);
    counts[b] += 1.0;
    ++n_kept;
  }

  double density(int b) const {
    if (n_kept == 0) return 0.0;
    return counts[b] / (static_cast<double>(n_kept) * bin_width());
  }

  /// Cumulative mass up to the right edge of bin b.
  double cumulative(int b) const {
    double c = 0.0;
    for (int i = 0; i <= b; ++i) c += counts[i];
    return n_kept == 0 ? 0.0 : c / static_cast<double>(n_kept);
  }
};

struct FitMetrics {
  double mse = 0.0;
  double r_squared = 0.0;
  double ks = 0.0;
};

/// Goodness-of-fit of an analytic density against a histogram: MSE and
/// R^2 over bin-center densities, KS as the sup difference between the
/// histogram CDF and the analytic CDF at bin edges.
inline FitMetrics fit_metrics(const Histogram& hist,
                              const std::function<double(double)>& pdf,
                              const std::function<double(double)>& cdf) {
  if (hist.bins() < 10)
    throw std::invalid_argument("fit_metrics: need at least 10 bins");
  int occupied = 0;
  for (double c : hist.counts)
    if (c > 0.0) ++occupied;
  if (occupied < 2)
    throw std::invalid_argument("fit_metrics: degenerate histogram");

  FitMetrics m;
  double mean_density = 0.0;
  for (int b = 0; b < hist.bins(); ++b) mean_density += hist.density(b);
  mean_density /= hist.bins();

  double ss_res = 0.0, ss_tot = 0.0;
  double cum = 0.0;
  const double norm = static_cast<double>(hist.n_kept);
  for (int b = 0; b < hist.bins(); ++b) {
    const double d = hist.density(b) - pdf(hist.center(b));
    ss_res += d * d;
    const double dev = hist.density(b) - mean_density;
    ss_tot += dev * dev;
    cum += hist.counts[b] / norm;
    m.ks = std::max(m.ks, std::fabs(cum - cdf(hist.edge(b + 1))));
  }
  m.mse = ss_res / hist.bins();
  m.r_squared = 1.0 - ss_res / ss_tot;
  return m;
}

/// One-sample Kolmogorov-Smirnov statistic from raw samples (sorted
/// internally) against an analytic CDF.
inline double ks_statistic(std::span<const double> samples,
                           const std::function<double(double)>& cdf) {
  std::vector<double> xs(samples.begin(), samples.end());
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double ks = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double F = cdf(xs[i]);
    ks = std::max(ks, std::fabs(F - static_cast<double>(i) / n));
    ks = std::max(ks, std::fabs(static_cast<double>(i + 1) / n - F));
  }
  return ks;
}

inline double binomial_stderr(double p_hat, std::size_t n) {
  return std::sqrt(std::max(p_hat * (1.0 - p_hat), 0.0) /
                   static_cast<double>(n));
}

}  // namespace w2a
