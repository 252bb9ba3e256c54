#pragma once

/* Optical force densities and experiment predictors, SI units throughout.

   Nonmagnetic medium, D = eps0 eps E, electrostriction omitted.  The force
   density splits as f = f_AM + f_A:

     f_AM = -1/2 eps0 E^2 grad(eps)                  (common to Abraham and Minkowski)
     f_A  = (n^2 - 1)/c^2 d/dt (E x H)               (Abraham term) */

#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <string>

#include "errors.hpp"
#include "units.hpp"
#include "vec3.hpp"

namespace movmed::si {

inline Vec3 abraham_minkowski_force(const Vec3& E, const Vec3& grad_eps) {
  return (-0.5 * vacuum_permittivity * dot3(E, E)) * grad_eps;
}

// d_dt_poynting is d(E x H)/dt in W/(m^2 s).
inline Vec3 abraham_force(double n, const Vec3& d_dt_poynting) {
  return ((n * n - 1.0) / (speed_of_light * speed_of_light)) * d_dt_poynting;
}

struct ForceSample {
  Vec3 position{};
  Vec3 f_am{};
  Vec3 f_a{};
  Vec3 f_total{};
};

inline ForceSample force_sample(const Vec3& position, double n, const Vec3& E, const Vec3& grad_eps,
                                const Vec3& d_dt_poynting) {
  ForceSample s{position, abraham_minkowski_force(E, grad_eps), abraham_force(n, d_dt_poynting), {}};
  s.f_total = s.f_am + s.f_a;
  return s;
}

// ---------------------------------------------------------------------------
// Monochromatic beam: E x H = S0 cos^2(omega t + phase) along direction.

struct MonochromaticBeam {
  Vec3 direction{0.0, 0.0, 1.0};  // unit
  double peak_poynting = 0.0;     // S0, W/m^2
  double omega = 0.0;             // rad/s
  double phase = 0.0;

  Vec3 poynting(double t) const {
    const double c = std::cos(omega * t + phase);
    return (peak_poynting * c * c) * direction;
  }
  Vec3 poynting_rate(double t) const {
    return (-peak_poynting * omega * std::sin(2.0 * (omega * t + phase))) * direction;
  }
  double period() const { return 2.0 * std::numbers::pi / omega; }
};

inline Vec3 abraham_force_at(double n, const MonochromaticBeam& beam, double t) {
  return abraham_force(n, beam.poynting_rate(t));
}

// Peak |f_A| for the beam.
inline double abraham_force_amplitude(double n, const MonochromaticBeam& beam) {
  return (n * n - 1.0) / (speed_of_light * speed_of_light) * beam.peak_poynting * std::abs(beam.omega);
}

// Time average of f_A over [t0, t1], integrated exactly:
// (n^2 - 1)/c^2 [E x H(t1) - E x H(t0)] / (t1 - t0).
inline Vec3 abraham_force_mean(double n, const MonochromaticBeam& beam, double t0, double t1) {
  if (!(t1 > t0)) throw domain_error("abraham_force_mean: empty interval");
  return (1.0 / (t1 - t0)) * abraham_force(n, beam.poynting(t1) - beam.poynting(t0));
}

// ---------------------------------------------------------------------------
// Radiation pressure on a mirror

// sigma_x = (n/c)(1 + R) S, the incident momentum flux plus the reflected one.
inline double mirror_pressure(double n, double reflectivity, double incident_poynting) {
  if (!(n > 0.0)) throw domain_error("mirror_pressure: refractive index must be positive");
  if (!(reflectivity >= 0.0 && reflectivity <= 1.0))
    throw domain_error("mirror_pressure: reflectivity outside [0, 1]");
  if (!(incident_poynting >= 0.0)) throw domain_error("mirror_pressure: negative Poynting flux");
  return n / speed_of_light * (1.0 + reflectivity) * incident_poynting;
}

// sigma(n) / sigma(1) at equal R and S.
inline double jones_ratio(double n, double reflectivity, double incident_poynting) {
  return mirror_pressure(n, reflectivity, incident_poynting) /
         mirror_pressure(1.0, reflectivity, incident_poynting);
}

// ---------------------------------------------------------------------------
// Abraham torque on a whispering-gallery ring
//
// Ring model: power P(t) = P cos(omega0 t + phase) circulates on a thin ring of
// radius R.  Integrating f_A over the ring, the tangential part of E x H sums
// to the circulating power times the circumference, so
//
//   N_z(t) = R (n^2 - 1)/c^2 * 2 pi R * dP/dt
//          = -omega0 (n^2 - 1) 2 pi R^2 P / c^2 * sin(omega0 t + phase).
//
// abraham_torque returns the amplitude; the sign of the instantaneous value
// follows the phase convention.

inline double abraham_torque(double power, double omega0, double ring_radius, double n) {
  if (!(power > 0.0 && omega0 > 0.0 && ring_radius > 0.0 && n > 0.0))
    throw domain_error("abraham_torque: inputs must be positive");
  return omega0 * (n * n - 1.0) * 2.0 * std::numbers::pi * ring_radius * ring_radius * power /
         (speed_of_light * speed_of_light);
}

inline double abraham_torque_at(double power, double omega0, double ring_radius, double n, double t,
                                double phase = 0.0) {
  return -abraham_torque(power, omega0, ring_radius, n) * std::sin(omega0 * t + phase);
}

// ---------------------------------------------------------------------------
// Surface pressure across a dielectric boundary layer

// eps(x) across [x_begin, x_end], x the coordinate normal to the layer.
struct PermittivityProfile {
  std::function<double(double)> eps;
  double x_begin = 0.0;
  double x_end = 1.0;
};

struct SurfacePressure {
  double pressure_pa = 0.0;  // integral of f_AM . x_hat across the layer
  bool non_monotone = false;
};

inline constexpr int monotonicity_samples = 1000;

// Integrates f_AM across the layer.  The tangential field E_t and the normal
// displacement D_n are continuous, so with E^2 = E_t^2 + D_n^2 / (eps0 eps)^2
//
//   integral f_AM dx = -1/2 eps0 E_t^2 [eps] + 1/2 (D_n^2 / eps0) [1/eps],
//
// which depends only on the end values.  Interior pressure (electrostriction)
// is not modelled.  A non-monotone profile raises the flag; the value is still
// returned.
inline SurfacePressure surface_force_integral(const PermittivityProfile& profile, double e_tangential,
                                              double d_normal = 0.0) {
  const double eps_a = profile.eps(profile.x_begin);
  const double eps_b = profile.eps(profile.x_end);
  if (!(eps_a > 0.0 && eps_b > 0.0)) throw domain_error("surface_force_integral: permittivity must be positive");

  SurfacePressure out;
  int direction = 0;
  double prev = eps_a;
  for (int i = 1; i <= monotonicity_samples; ++i) {
    const double x = profile.x_begin + (profile.x_end - profile.x_begin) * i / monotonicity_samples;
    const double cur = profile.eps(x);
    const int step = cur > prev ? 1 : (cur < prev ? -1 : 0);
    if (step != 0) {
      if (direction != 0 && step != direction) out.non_monotone = true;
      direction = step;
    }
    prev = cur;
  }

  out.pressure_pa = -0.5 * vacuum_permittivity * e_tangential * e_tangential * (eps_b - eps_a) +
                    0.5 * d_normal * d_normal / vacuum_permittivity * (1.0 / eps_b - 1.0 / eps_a);
  return out;
}

// ---------------------------------------------------------------------------
// Experiment predictions

struct ExperimentPrediction {
  std::string name;
  double value = 0.0;
  std::string unit;
  std::map<std::string, double> inputs;
};

inline ExperimentPrediction predict_mirror_pressure(double n, double reflectivity, double incident_poynting) {
  return {"mirror_pressure", mirror_pressure(n, reflectivity, incident_poynting), "Pa",
          {{"n", n}, {"reflectivity", reflectivity}, {"incident_poynting_w_m2", incident_poynting}}};
}

inline ExperimentPrediction predict_jones_ratio(double n, double reflectivity, double incident_poynting) {
  return {"jones_ratio", jones_ratio(n, reflectivity, incident_poynting), "1",
          {{"n", n}, {"reflectivity", reflectivity}, {"incident_poynting_w_m2", incident_poynting}}};
}

inline ExperimentPrediction predict_photon_recoil(double n, double omega) {
  if (!(n > 0.0 && omega > 0.0)) throw domain_error("photon recoil: n and omega must be positive");
  return {"photon_recoil", hbar * n * omega / speed_of_light, "kg m/s", {{"n", n}, {"omega_rad_s", omega}}};
}

inline ExperimentPrediction predict_abraham_torque(double power, double omega0, double ring_radius, double n) {
  return {"abraham_torque", abraham_torque(power, omega0, ring_radius, n), "N m",
          {{"power_w", power}, {"modulation_omega_rad_s", omega0}, {"ring_radius_m", ring_radius}, {"n", n}}};
}

}  // namespace movmed::si
