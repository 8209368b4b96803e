// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include "w2a/special_functions.hpp"
#include "w2a/surface.hpp"
#include "w2a/weibull.hpp"

namespace w2a {

/// Deterministic link scene. Angles of the beam divergence are radians,
/// the receiver field of view is degrees (it gates the degree-valued
/// arrival angle). Wavelength and transmit-power entries elsewhere in
/// the configuration are metadata only.
struct LinkGeometry {
  double z_w = 10.0;          // transmitter depth, m
  double z_a = 5.0;           // receiver altitude, m
  double theta_0 = 0.05;      // half divergence, rad
  double D_r = 0.075;         // receiver lens diameter, m
  double theta_fov = 30.0;    // receiver field of view, degrees
  double wavelength_nm = 450.0;

  void validate() const {
    if (!(z_w > 0.0 && z_a > 0.0 && theta_0 > 0.0 && D_r > 0.0 &&
          theta_fov >= 0.0 && wavelength_nm > 0.0))
      throw std::domain_error("LinkGeometry: fields must be positive");
    if (!(theta_0 < M_PI / 2))
      throw std::domain_error("LinkGeometry: theta_0 must be < pi/2");
  }
};

/// Beam quantities at the receiver plane for a given scene.
///   omega_L   geometric beam waist at L = z_w + z_a
///   v         aperture-to-beam ratio D_r sqrt(pi) / (2 sqrt(2) omega_L)
///   A0        peak collectable fraction erf(v)^2
///   omega_Leq equivalent beam width making the exponential loss model
///             exact at zero displacement
struct BeamAtReceiver {
  double omega_L;
  double v;
  double A0;
  double omega_Leq;

  double omega_Leq_sq() const { return omega_Leq * omega_Leq; }
};

inline BeamAtReceiver beam_at_receiver(const LinkGeometry& geom) {
  geom.validate();
  BeamAtReceiver b;
  const double L = geom.z_w + geom.z_a;
  b.omega_L = L * std::tan(geom.theta_0);
  b.v = geom.D_r * std::sqrt(M_PI) / (2.0 * std::sqrt(2.0) * b.omega_L);
  const double erf_v = w2a::erf(b.v);
  b.A0 = erf_v * erf_v;
  const double wleq_sq = b.omega_L * b.omega_L * std::sqrt(M_PI) * erf_v /
                         (2.0 * b.v * std::exp(-b.v * b.v));
  b.omega_Leq = std::sqrt(wleq_sq);
  return b;
}

/// h_P = A0 exp(-2 r_d^2 / omega_Leq^2).
inline double pointing_loss(double r_d, const BeamAtReceiver& beam) {
  if (!(r_d >= 0.0)) throw std::domain_error("pointing_loss: requires r_d >= 0");
  return beam.A0 * std::exp(-2.0 * r_d * r_d / beam.omega_Leq_sq());
}

/// r_d = z_a tan(theta_A), theta_A in degrees.
inline double radial_displacement(double theta_a_deg, double z_a) {
  if (!(theta_a_deg >= 0.0 && theta_a_deg < 90.0))
    throw std::domain_error("radial_displacement: requires theta_A in [0, 90)");
  return z_a * std::tan(deg_to_rad(theta_a_deg));
}

/// Density of the radial displacement r_d = z_a tan(theta_A) under the
/// Weibull arrival-angle model. The model scale is degree-valued, so the
/// arctangent Jacobian carries a 180/pi factor.
inline double pdf_radial(double r_d, const AoAModel& aoa, double z_a) {
  if (!(r_d >= 0.0)) throw std::domain_error("pdf_radial: requires r_d >= 0");
  if (!(z_a > 0.0)) throw std::domain_error("pdf_radial: requires z_a > 0");
  const double theta_deg = rad_to_deg(std::atan(r_d / z_a));
  const double jac = rad_to_deg(z_a / (z_a * z_a + r_d * r_d));
  return weibull_pdf(aoa.params, theta_deg) * jac;
}

/// Density of the pointing loss h_P on (0, A0], obtained by the change
/// of variable r_d = sqrt(-(omega_Leq^2/2) ln(h_P/A0)). Evaluated in log
/// space; values below exp(-690) are reported as zero.
inline double pdf_pointing_loss(double h_p, const BeamAtReceiver& beam,
                                const AoAModel& aoa, double z_a) {
  if (!(h_p > 0.0 && h_p <= beam.A0))
    throw std::domain_error("pdf_pointing_loss: requires h_P in (0, A0]");
  const double wsq = beam.omega_Leq_sq();
  const double ln_ratio = std::log(h_p / beam.A0);  // <= 0
  const double r_d = std::sqrt(-0.5 * wsq * ln_ratio);
  if (r_d == 0.0) {
    // h_P = A0 exactly: f ~ C r^(k-2) as r -> 0, an integrable boundary
    // singularity for shape < 2 and a vanishing density for shape > 2.
    const double k = aoa.params.shape;
    if (k < 2.0) return std::numeric_limits<double>::infinity();
    if (k > 2.0) return 0.0;
    const double slope = rad_to_deg(1.0 / z_a);
    return 2.0 * slope * slope * wsq /
           (4.0 * beam.A0 * aoa.params.scale * aoa.params.scale);
  }
  const double f_rd = pdf_radial(r_d, aoa, z_a);
  if (f_rd <= 0.0) return 0.0;
  const double ln_f =
      std::log(f_rd) + std::log(wsq / 4.0) - std::log(h_p) - std::log(r_d);
  if (ln_f < -690.0) return 0.0;
  return std::exp(ln_f);
}

}  // namespace w2a
