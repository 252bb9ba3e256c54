#pragma once

/* Dispersion shell k^2 + kappa (k.V)^2 = 0 of a moving medium.

   For fixed kvec the shell is a quadratic in the frequency k0,

     (1 + kappa V0^2) k0^2 - 2 kappa V0 (kvec.V) k0 + kappa (kvec.V)^2 - kvec^2 = 0,

   with discriminant (1 + kappa V0^2) kvec^2 - kappa (kvec.V)^2.  The upper
   root k_a turns negative for some kvec exactly when n v > 1 (the Cherenkov
   regime).  For fixed k0 the shell is an ellipsoid below that threshold and a
   two-sheet hyperboloid above it. */

#include <array>
#include <cmath>
#include <numbers>
#include <utility>
#include <string_view>

#include "errors.hpp"
#include "medium.hpp"
#include "plane_wave.hpp"
#include "tensor.hpp"
#include "vec3.hpp"

namespace movmed {

inline double dispersion_residual(const MediumSpec& m, const RealFourVector& k) {
  const double kV = dot(k, m.four_velocity());
  return dot(k, k) + m.kappa() * kV * kV;
}

// Tolerance used to decide shell membership, scaled with |k|^2.
inline bool on_shell(const MediumSpec& m, const RealFourVector& k, double tol = 1e-10) {
  return std::abs(dispersion_residual(m, k)) <= tol * (1.0 + euclidean_norm_sq(k));
}

struct FrequencyRoots {
  double k_a;  // upper sign
  double k_b;  // lower sign
};

namespace detail {

struct Quadratic {
  double a;     // 1 + kappa V0^2
  double half;  // kappa V0 (kvec.V), so that k0 = (half +- sqrt(disc)) / a
  double c;     // kappa (kvec.V)^2 - kvec^2
  double disc;  // (1 + kappa V0^2) kvec^2 - kappa (kvec.V)^2
};

inline Quadratic frequency_quadratic(const MediumSpec& m, const Vec3& kvec) {
  const auto& V = m.four_velocity();
  const double V0 = V[0];
  const double s = dot3(kvec, V.spatial());
  const double k2 = dot3(kvec, kvec);
  const double kappa = m.kappa();
  return {1.0 + kappa * V0 * V0, kappa * V0 * s, kappa * s * s - k2,
          (1.0 + kappa * V0 * V0) * k2 - kappa * s * s};
}

}  // namespace detail

// Both roots of the frequency quadratic, k_a >= k_b.  The larger-magnitude
// root comes from the closed form, the other from the product of roots c/a.
inline FrequencyRoots solve_k0(const MediumSpec& m, const Vec3& kvec) {
  if (dot3(kvec, kvec) == 0.0) throw domain_error("solve_k0: zero wavevector");
  const auto q = detail::frequency_quadratic(m, kvec);
  if (q.disc < 0.0) throw domain_error("solve_k0: no real root");
  if (std::abs(q.a) < 1e-14) throw domain_error("solve_k0: degenerate frequency quadratic");
  const double root = std::sqrt(q.disc);
  const double big = q.half + std::copysign(root, q.half);
  const double r1 = big / q.a;
  const double r2 = q.c / big;
  if (r1 >= r2) return {r1, r2};
  return {r2, r1};
}

// [mu / ((1 + kappa V0^2)(k_a - k_b))]^{1/2}, the classical mode normalization.
// (1 + kappa V0^2)(k_a - k_b) equals |d residual / d k0| on either root.
inline double mode_normalization(const MediumSpec& m, const Vec3& kvec) {
  const auto roots = solve_k0(m, kvec);
  const auto q = detail::frequency_quadratic(m, kvec);
  return std::sqrt(m.mu() / (q.a * (roots.k_a - roots.k_b)));
}

inline PlaneWave make_plane_wave(const MediumSpec& m, const Vec3& kvec, Branch branch,
                                 const ComplexFourVector& polarization = {}) {
  const auto roots = solve_k0(m, kvec);
  const double k0 = branch == Branch::b ? roots.k_b : roots.k_a;
  return {RealFourVector::from_parts(k0, kvec), polarization,
          branch == Branch::none ? Branch::a : branch};
}

// ---------------------------------------------------------------------------
// Cherenkov regime

struct CherenkovDiagnostics {
  double n2v2;      // n^2 v^2
  double kappa_V2;  // kappa |V_spatial|^2 = kappa gamma^2 v^2
  bool regime;      // n^2 v^2 > 1
};

// The two forms of the threshold are the same condition:
// kappa gamma^2 v^2 - 1 = (n^2 v^2 - 1) / (1 - v^2).
inline CherenkovDiagnostics cherenkov_diagnostics(const MediumSpec& m) {
  const double v2 = dot3(m.velocity(), m.velocity());
  const double n2v2 = m.n() * m.n() * v2;
  const double kV2 = m.kappa() * m.spatial_four_velocity_sq();
  const double lhs = n2v2 - 1.0, rhs = kV2 - 1.0;
  if (std::abs(lhs) > 1e-12 && std::abs(rhs) > 1e-12 && (lhs > 0) != (rhs > 0))
    throw invariant_violation("Cherenkov threshold forms disagree");
  return {n2v2, kV2, n2v2 > 1.0};
}

inline bool cherenkov_regime(const MediumSpec& m) { return cherenkov_diagnostics(m).regime; }

// ---------------------------------------------------------------------------
// Wave surface k0 = const

enum class SurfaceKind { ellipsoid, two_sheet_hyperboloid, degenerate };

inline std::string_view to_string(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::ellipsoid: return "ellipsoid";
    case SurfaceKind::two_sheet_hyperboloid: return "two_sheet_hyperboloid";
    case SurfaceKind::degenerate: return "degenerate";
  }
  return "unknown";
}

inline constexpr double degeneracy_band = 1e-12;

// The quadric in normal form
//
//   (k_par - center)^2 / axial^2 +- k_perp^2 / transverse^2 = 1,
//
// with k_par measured along the medium velocity.  For the hyperboloid the
// transverse term carries the minus sign.  Axis and center are reported in
// the caller's frame.
struct WaveSurfaceClass {
  SurfaceKind kind = SurfaceKind::degenerate;
  double kappa_V2 = 0.0;  // kappa |V_spatial|^2; kind is decided by 1 - kappa_V2
  Vec3 axis{1.0, 0.0, 0.0};
  Vec3 center{0.0, 0.0, 0.0};
  double axial_semi_axis = 0.0;
  double transverse_semi_axis = 0.0;
};

namespace detail {

inline Vec3 velocity_axis(const MediumSpec& m) {
  const Vec3 Vs = m.four_velocity().spatial();
  const double W = norm3(Vs);
  if (W == 0.0) return {1.0, 0.0, 0.0};
  return (1.0 / W) * Vs;
}

inline WaveSurfaceClass wave_surface_geometry(const MediumSpec& m, double k0) {
  WaveSurfaceClass s;
  const double kappa = m.kappa();
  const double W = std::sqrt(m.spatial_four_velocity_sq());
  const double V0 = m.four_velocity()[0];
  s.kappa_V2 = kappa * W * W;
  s.axis = velocity_axis(m);
  const double d = 1.0 - s.kappa_V2;
  if (std::abs(d) < degeneracy_band) {
    s.kind = SurfaceKind::degenerate;
    return s;
  }
  const double nk = m.n() * std::abs(k0);
  s.center = (-kappa * k0 * V0 * W / d) * s.axis;
  s.axial_semi_axis = nk / std::abs(d);
  s.transverse_semi_axis = nk / std::sqrt(std::abs(d));
  s.kind = d > 0 ? SurfaceKind::ellipsoid : SurfaceKind::two_sheet_hyperboloid;
  return s;
}

}  // namespace detail

namespace detail {

// Axial and radial offsets of the surface point at parameter t.
inline std::pair<double, double> surface_offsets(const WaveSurfaceClass& s, double cos_or_cosh, double sin_or_sinh,
                                                 int sheet) {
  if (s.kind == SurfaceKind::ellipsoid)
    return {s.axial_semi_axis * cos_or_cosh, s.transverse_semi_axis * sin_or_sinh};
  if (s.kind == SurfaceKind::two_sheet_hyperboloid)
    return {(sheet >= 0 ? 1.0 : -1.0) * s.axial_semi_axis * cos_or_cosh, s.transverse_semi_axis * sin_or_sinh};
  throw domain_error("wave_surface_point: degenerate surface has no normal form");
}

}  // namespace detail

// Points on the classified surface, parametrized by (t, phi).  For the
// ellipsoid t is the polar angle; for the hyperboloid t is the hyperbolic
// parameter and sheet selects the sign of the axial offset.
inline Vec3 wave_surface_point(const WaveSurfaceClass& s, double t, double phi, int sheet = 1) {
  const bool ellipsoid = s.kind == SurfaceKind::ellipsoid;
  const auto [along, radial] = detail::surface_offsets(s, ellipsoid ? std::cos(t) : std::cosh(t),
                                                       ellipsoid ? std::sin(t) : std::sinh(t), sheet);
  const Vec3 e2 = any_perpendicular(s.axis);
  const Vec3 e3 = cross3(s.axis, e2);
  return s.center + along * s.axis + (radial * std::cos(phi)) * e2 + (radial * std::sin(phi)) * e3;
}

inline constexpr double surface_sample_tolerance = 1e-8;

namespace detail {

inline constexpr int surface_samples_t = 10;
inline constexpr int surface_samples_phi = 10;

struct SurfaceSampleTables {
  std::array<double, surface_samples_t> cos_t, sin_t, cosh_t, sinh_t;
  std::array<double, surface_samples_phi> cos_phi, sin_phi;
};

inline const SurfaceSampleTables& surface_sample_tables() {
  static const SurfaceSampleTables tables = [] {
    SurfaceSampleTables tb{};
    for (int i = 0; i < surface_samples_t; ++i) {
      const double polar = std::numbers::pi * (i + 0.5) / surface_samples_t;
      const double hyper = 2.0 * (i + 0.5) / surface_samples_t;
      tb.cos_t[i] = std::cos(polar);
      tb.sin_t[i] = std::sin(polar);
      tb.cosh_t[i] = std::cosh(hyper);
      tb.sinh_t[i] = std::sinh(hyper);
    }
    for (int j = 0; j < surface_samples_phi; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / surface_samples_phi;
      tb.cos_phi[j] = std::cos(phi);
      tb.sin_phi[j] = std::sin(phi);
    }
    return tb;
  }();
  return tables;
}

}  // namespace detail

// Classifies k0 = const by the sign of 1 - kappa |V|^2 and checks the
// returned normal form on 100 sampled points against the dispersion residual.
inline WaveSurfaceClass classify_wave_surface(const MediumSpec& m, double k0) {
  if (k0 == 0.0) throw domain_error("classify_wave_surface: k0 must be nonzero");
  const auto s = detail::wave_surface_geometry(m, k0);
  if (s.kind == SurfaceKind::degenerate) return s;

  const auto& tb = detail::surface_sample_tables();
  const bool ellipsoid = s.kind == SurfaceKind::ellipsoid;
  const Vec3 e2 = any_perpendicular(s.axis);
  const Vec3 e3 = cross3(s.axis, e2);
  for (int i = 0; i < detail::surface_samples_t; ++i) {
    for (int j = 0; j < detail::surface_samples_phi; ++j) {
      const int sheet = (j % 2 == 0) ? 1 : -1;
      const auto [along, radial] = detail::surface_offsets(s, ellipsoid ? tb.cos_t[i] : tb.cosh_t[i],
                                                           ellipsoid ? tb.sin_t[i] : tb.sinh_t[i], sheet);
      const Vec3 kvec = s.center + along * s.axis + (radial * tb.cos_phi[j]) * e2 + (radial * tb.sin_phi[j]) * e3;
      const auto k = RealFourVector::from_parts(k0, kvec);
      if (std::abs(dispersion_residual(m, k)) > surface_sample_tolerance * (1.0 + euclidean_norm_sq(k)))
        throw invariant_violation("classify_wave_surface: sampled point off the shell");
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Cherenkov cone

inline constexpr double cone_angle_tolerance = 1e-10;

// Half-angle, about -v, of the cone of directions for which k_a < 0.
// k_a depends on direction only through the angle to the velocity, so the
// boundary is found by bisection on that angle.
inline double cherenkov_cone(const MediumSpec& m) {
  if (!cherenkov_regime(m)) throw domain_error("cherenkov_cone: medium is below the Cherenkov threshold");
  const Vec3 axis = detail::velocity_axis(m);
  const Vec3 perp = any_perpendicular(axis);
  auto negative_at = [&](double theta) {
    const Vec3 dir = (-std::cos(theta)) * axis + std::sin(theta) * perp;
    return solve_k0(m, dir).k_a < 0.0;
  };
  double inside = 0.0, outside = std::numbers::pi / 2;
  if (!negative_at(inside)) return 0.0;
  while (outside - inside > cone_angle_tolerance) {
    const double mid = 0.5 * (inside + outside);
    if (negative_at(mid))
      inside = mid;
    else
      outside = mid;
  }
  return 0.5 * (inside + outside);
}

}  // namespace movmed
