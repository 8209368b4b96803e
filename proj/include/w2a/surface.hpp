// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

#include "w2a/random.hpp"
#include "w2a/weibull.hpp"

namespace w2a {

inline constexpr double deg_to_rad(double d) { return d * M_PI / 180.0; }
inline constexpr double rad_to_deg(double r) { return r * 180.0 / M_PI; }

struct RefractiveIndices {
  double n_water = 1.33;
  double n_air = 1.0;

  void validate() const {
    if (!(n_water > n_air && n_air > 0.0))
      throw std::domain_error("RefractiveIndices: need n_water > n_air > 0");
  }

  /// Critical angle arcsin(n_air/n_water), degrees.
  double critical_angle_deg() const {
    validate();
    return rad_to_deg(std::asin(n_air / n_water));
  }
};

/// Wind-speed range over which the incidence/arrival regressions were
/// established; outside it the models are extrapolations.
inline constexpr double kWindRegressionMin = 6.0;
inline constexpr double kWindRegressionMax = 15.0;

/// Weibull model of the sea-surface incidence angle theta_I (degrees).
struct IncidenceModel {
  double wind_speed = 0.0;  // m/s
  WeibullParams params{1.0, 1.0};
  bool wind_in_range = true;
};

/// Weibull model of the arrival angle theta_A (degrees), conditioned on
/// transmission through the interface.
struct AoAModel {
  double wind_speed = 0.0;  // m/s
  WeibullParams params{1.0, 1.0};
  double critical_angle = 0.0;  // degrees
  bool wind_in_range = true;
};

/// k_U = 1.7454 + 0.0071 U,  lambda_U = 13.6485 + 0.2406 U  (degrees).
inline IncidenceModel incidence_model_for_wind(double wind_speed) {
  IncidenceModel m;
  m.wind_speed = wind_speed;
  m.params = WeibullParams{1.7454 + 0.0071 * wind_speed,
                           13.6485 + 0.2406 * wind_speed};
  m.wind_in_range =
      wind_speed >= kWindRegressionMin && wind_speed <= kWindRegressionMax;
  m.params.validate();
  return m;
}

/// k_A ~= 1.60,  lambda_A = 4.7473 + 0.0957 U  (degrees).
inline AoAModel aoa_model_for_wind(double wind_speed,
                                   const RefractiveIndices& n = {}) {
  AoAModel m;
  m.wind_speed = wind_speed;
  m.params = WeibullParams{1.60, 4.7473 + 0.0957 * wind_speed};
  m.critical_angle = n.critical_angle_deg();
  m.wind_in_range =
      wind_speed >= kWindRegressionMin && wind_speed <= kWindRegressionMax;
  m.params.validate();
  return m;
}

/// Snell refraction water -> air. Returns the transmission angle
/// theta_T (degrees from the surface normal), or nullopt under total
/// internal reflection.
inline std::optional<double> snell_refract(double theta_i_deg,
                                           const RefractiveIndices& n = {}) {
  n.validate();
  if (!(theta_i_deg >= 0.0 && theta_i_deg < 90.0))
    throw std::domain_error("snell_refract: requires theta_I in [0, 90)");
  const double s = (n.n_water / n.n_air) * std::sin(deg_to_rad(theta_i_deg));
  if (s > 1.0) return std::nullopt;
  return rad_to_deg(std::asin(s));
}

/// Arrival angle theta_A = theta_T - theta_I (degrees), or nullopt under
/// total internal reflection.
inline std::optional<double> aoa_from_incidence(double theta_i_deg,
                                                const RefractiveIndices& n = {}) {
  const auto theta_t = snell_refract(theta_i_deg, n);
  if (!theta_t) return std::nullopt;
  return *theta_t - theta_i_deg;
}

/// One Weibull incidence-angle draw (degrees). Values at or above 90
/// degrees are possible only in the far tail of the distribution; they
/// are indistinguishable from TIR downstream and are reported as-is.
inline double sample_incidence(const IncidenceModel& model,
                               RandomStream& stream) {
  return weibull_sample(model.params, stream);
}

/// Numerically invert theta_A(theta_I) on [0, critical angle).
inline double incidence_from_aoa(double theta_a_deg,
                                 const RefractiveIndices& n = {}) {
  const double theta_c = n.critical_angle_deg();
  if (!(theta_a_deg >= 0.0 && theta_a_deg < 90.0 - theta_c))
    throw std::domain_error("incidence_from_aoa: angle outside image");
  double lo = 0.0, hi = theta_c * (1.0 - 1e-15);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const auto a = aoa_from_incidence(mid, n);
    if (a && *a < theta_a_deg) lo = mid;
    else hi = mid;
    if (hi - lo < 1e-13) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace w2a
