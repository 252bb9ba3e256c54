#pragma once

/* Vacuum <-> medium mapping.

   A medium potential A at y = b x corresponds to the vacuum potential
   A_vac(x) = rho b A(b x), rho = (n/mu)^{1/2}.  For plane waves this reduces
   to wavevector and amplitude rules

     l = b k,    e = rho b a          (medium -> vacuum)
     k = b^{-1} l,  a = b^{-1} e / rho (vacuum -> medium)

   and l^2 = k.b^2 k = k^2 + kappa (k.V)^2, so the vacuum null cone maps onto
   the dispersion shell.  Every b-product here preserves the variance of its
   argument: b^{-1} x for an upper x yields upper components, and likewise for
   lower.

   Caller-supplied field functions passed to the *_field mappers must be safe
   to evaluate concurrently if the returned mapped field is. */

#include <array>
#include <cmath>
#include <utility>

#include "dispersion.hpp"
#include "errors.hpp"
#include "medium.hpp"
#include "plane_wave.hpp"
#include "tensor.hpp"
#include "vec3.hpp"

namespace movmed {

inline constexpr double null_tolerance = 1e-10;
inline constexpr double transport_tolerance = 1e-9;

namespace detail {

template <Scalar T>
FourVector<T> b_times(const MediumSpec& m, int p, const FourVector<T>& x) {
  return act(b_power(m, p), x).as(x.variance);
}

inline bool is_null(const RealFourVector& l) {
  return std::abs(dot(l, l)) <= null_tolerance * euclidean_norm_sq(l);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Points

inline RealFourVector map_point(const MediumSpec& m, const RealFourVector& x) {
  return detail::b_times(m, 1, x);
}

inline RealFourVector unmap_point(const MediumSpec& m, const RealFourVector& y) {
  return detail::b_times(m, -1, y);
}

// ---------------------------------------------------------------------------
// Potentials

// Plane-wave medium potential -> vacuum potential.  The vacuum wave carries l
// in .k and e in .polarization.
inline PlaneWave map_potential_to_vacuum(const MediumSpec& m, const PlaneWave& medium) {
  return {detail::b_times(m, 1, medium.k),
          m.rho() * detail::b_times(m, 1, medium.polarization), Branch::none};
}

inline PlaneWave map_potential_to_medium(const MediumSpec& m, const PlaneWave& vacuum) {
  const auto k = detail::b_times(m, -1, vacuum.k);
  Branch branch = Branch::none;
  if (dot3(k.spatial(), k.spatial()) > 0.0 && on_shell(m, k, transport_tolerance)) {
    const auto roots = solve_k0(m, k.spatial());
    branch = std::abs(k.raised()[0] - roots.k_a) <= std::abs(k.raised()[0] - roots.k_b) ? Branch::a
                                                                                         : Branch::b;
  }
  return {k, (1.0 / m.rho()) * detail::b_times(m, -1, vacuum.polarization), branch};
}

// A_vac(x) = rho b A(b x) for a sampled medium potential A : FourVector -> FourVector.
template <class Field>
auto map_potential_field_to_vacuum(const MediumSpec& m, Field medium_field) {
  return [m, field = std::move(medium_field)](const RealFourVector& x) {
    const auto A = field(map_point(m, x));
    return m.rho() * detail::b_times(m, 1, A);
  };
}

// A(y) = b^{-1} A_vac(b^{-1} y) / rho
template <class Field>
auto map_potential_field_to_medium(const MediumSpec& m, Field vacuum_field) {
  return [m, field = std::move(vacuum_field)](const RealFourVector& y) {
    const auto A = field(unmap_point(m, y));
    return (1.0 / m.rho()) * detail::b_times(m, -1, A);
  };
}

// d.A_vac for a vacuum plane wave: -i l.e.
inline complex vacuum_gauge_divergence(const PlaneWave& vacuum) {
  return complex(0.0, -1.0) * dot(vacuum.k, vacuum.polarization);
}

// ---------------------------------------------------------------------------
// Currents

// j(x) = amplitude e^{-i k.x} + c.c.
struct PlaneWaveCurrent {
  RealFourVector k;
  ComplexFourVector amplitude;
};

inline constexpr double continuity_tolerance = 1e-8;

// j_vac = rho mu b^{-1} j, on the vacuum wavevector l = b k.  Continuity
// k.j = 0 in the medium is required and carries over to l.j_vac = 0.
inline PlaneWaveCurrent map_current(const MediumSpec& m, const PlaneWaveCurrent& medium) {
  const double scale = std::max(1.0, euclidean_norm(medium.k) * euclidean_norm(medium.amplitude));
  if (std::abs(dot(medium.k, medium.amplitude)) > continuity_tolerance * scale)
    throw continuity_violation("map_current: medium current violates continuity");
  PlaneWaveCurrent vac{detail::b_times(m, 1, medium.k),
                       (m.rho() * m.mu()) * detail::b_times(m, -1, medium.amplitude)};
  if (std::abs(dot(vac.k, vac.amplitude)) > continuity_tolerance * m.rho() * m.mu() * scale)
    throw invariant_violation("map_current: continuity lost in the mapping");
  return vac;
}

inline PlaneWaveCurrent unmap_current(const MediumSpec& m, const PlaneWaveCurrent& vacuum) {
  return {detail::b_times(m, -1, vacuum.k),
          (1.0 / (m.rho() * m.mu())) * detail::b_times(m, 1, vacuum.amplitude)};
}

// j_vac(x) = rho mu b^{-1} j(b x)
template <class Field>
auto map_current_field(const MediumSpec& m, Field medium_current) {
  return [m, field = std::move(medium_current)](const RealFourVector& x) {
    const auto j = field(map_point(m, x));
    return (m.rho() * m.mu()) * detail::b_times(m, -1, j);
  };
}

// ---------------------------------------------------------------------------
// Wavevectors

inline RealFourVector map_wavevector(const MediumSpec& m, const RealFourVector& l) {
  if (!detail::is_null(l)) throw domain_error("input is not a vacuum photon");
  const auto k = detail::b_times(m, -1, l);
  if (!on_shell(m, k, transport_tolerance))
    throw invariant_violation("map_wavevector: mapped wavevector is off the dispersion shell");
  return k;
}

inline RealFourVector unmap_wavevector(const MediumSpec& m, const RealFourVector& k) {
  if (!on_shell(m, k, transport_tolerance)) throw domain_error("input is not on the dispersion shell");
  return detail::b_times(m, 1, k);
}

// ---------------------------------------------------------------------------
// Polarizations

enum class Shell { vacuum, medium };

// Two transverse polarization four-vectors (lambda = 2, 3) for a photon
// wavevector.  In the medium rest frame they are (0, e2), (0, e3) with
// e2 x e3 along the spatial wavevector.
struct PolarizationBasis {
  RealFourVector wavevector;
  std::array<ComplexFourVector, 2> vectors;
  Shell shell = Shell::vacuum;
};

namespace detail {

// Gram-Schmidt against the coordinate axis least aligned with the rest-frame
// wavevector, then boost back to the lab.
inline std::array<ComplexFourVector, 2> rest_frame_transverse_pair(const MediumSpec& m,
                                                                   const RealFourVector& w) {
  const Vec3& v = m.velocity();
  const auto to_rest = boost_matrix({-v[0], -v[1], -v[2]});
  const auto to_lab = boost_matrix(v);
  const Vec3 dir = lorentz_transform(to_rest, w.raised()).spatial();
  const double len = norm3(dir);
  if (len == 0.0) throw singular_configuration("polarization basis: wavevector has no rest-frame direction");
  const Vec3 khat = (1.0 / len) * dir;

  Vec3 seed{0.0, 0.0, 0.0};
  const double ax = std::abs(khat[0]), ay = std::abs(khat[1]), az = std::abs(khat[2]);
  seed[(ax <= ay && ax <= az) ? 0 : (ay <= az ? 1 : 2)] = 1.0;
  Vec3 e2 = seed - dot3(seed, khat) * khat;
  e2 = (1.0 / norm3(e2)) * e2;
  const Vec3 e3 = cross3(khat, e2);  // e2 x e3 = khat

  std::array<ComplexFourVector, 2> out;
  const std::array<Vec3, 2> spatial{e2, e3};
  for (std::size_t i = 0; i < 2; ++i) {
    const auto rest = RealFourVector::from_parts(0.0, spatial[i]);
    out[i] = to_complex(lorentz_transform(to_lab, rest));
  }
  return out;
}

inline void require_unit_polarization(const ComplexFourVector& e) {
  if (std::abs(dot(e, conj(e)) + 1.0) > null_tolerance)
    throw domain_error("polarization vector is not normalized to e.e* = -1");
}

}  // namespace detail

inline PolarizationBasis vacuum_polarization_basis(const MediumSpec& m, const RealFourVector& l) {
  if (!detail::is_null(l)) throw domain_error("input is not a vacuum photon");
  return {l, detail::rest_frame_transverse_pair(m, l), Shell::vacuum};
}

// b^{-1} leaves rest-frame spatial vectors alone, so the medium basis has the
// same rest-frame form as the vacuum one.
inline PolarizationBasis medium_polarization_basis(const MediumSpec& m, const RealFourVector& k) {
  if (!on_shell(m, k, transport_tolerance)) throw domain_error("input is not on the dispersion shell");
  return {k, detail::rest_frame_transverse_pair(m, k), Shell::medium};
}

// f = b^{-1} e on k = b^{-1} l.
inline PolarizationBasis map_polarization(const MediumSpec& m, const PolarizationBasis& vacuum) {
  if (vacuum.shell != Shell::vacuum) throw domain_error("map_polarization: expected a vacuum basis");
  PolarizationBasis out{map_wavevector(m, vacuum.wavevector), {}, Shell::medium};
  for (std::size_t i = 0; i < 2; ++i) {
    detail::require_unit_polarization(vacuum.vectors[i]);
    out.vectors[i] = detail::b_times(m, -1, vacuum.vectors[i]);
  }
  return out;
}

inline PolarizationBasis unmap_polarization(const MediumSpec& m, const PolarizationBasis& medium) {
  if (medium.shell != Shell::medium) throw domain_error("unmap_polarization: expected a medium basis");
  PolarizationBasis out{unmap_wavevector(m, medium.wavevector), {}, Shell::vacuum};
  for (std::size_t i = 0; i < 2; ++i) {
    out.vectors[i] = detail::b_times(m, 1, medium.vectors[i]);
    detail::require_unit_polarization(out.vectors[i]);
  }
  return out;
}

// sum_lambda e_mu e_nu^*, all-lower.
inline ComplexTensor2 polarization_sum_from_basis(const PolarizationBasis& basis) {
  ComplexTensor2 sum(Index::lower, Index::lower);
  for (const auto& e : basis.vectors) sum = sum + outer(e.lowered(), conj(e).lowered());
  return sum;
}

// Closed forms, all-lower:
//
//   vacuum:  -g      - l l / (l.V)^2       + (l V + V l) / (l.V)
//   medium:  -b^{-2} - k k / (n k.V)^2     + (k V + V k) / (n^2 k.V)
//
// The medium form is the vacuum one pushed through f = b^{-1} e, using
// b^{-1} V = V / n and l.V = n k.V.
inline RealTensor2 polarization_sum_closed_form(const MediumSpec& m, const RealFourVector& w, Shell shell) {
  const auto V = m.four_velocity().lowered();
  const auto wl = w.lowered();
  const double wV = dot(w, V);
  if (std::abs(wV) <= 1e-14 * euclidean_norm(w))
    throw singular_configuration("polarization sum: wavevector orthogonal to the medium velocity");
  if (shell == Shell::vacuum)
    return (-1.0) * metric() - (1.0 / (wV * wV)) * outer(wl, wl) + (1.0 / wV) * (outer(wl, V) + outer(V, wl));
  const double n2 = m.n() * m.n();
  return (-1.0) * b_power(m, -2) - (1.0 / (n2 * wV * wV)) * outer(wl, wl) +
         (1.0 / (n2 * wV)) * (outer(wl, V) + outer(V, wl));
}

inline constexpr double polarization_sum_tolerance = 1e-10;

// Builds an explicit basis for w, sums it, and requires agreement with the
// closed form.  Returns the closed form.
inline RealTensor2 polarization_sum(const MediumSpec& m, const RealFourVector& w, Shell shell) {
  const auto closed = polarization_sum_closed_form(m, w, shell);
  const auto basis = shell == Shell::vacuum ? vacuum_polarization_basis(m, w) : medium_polarization_basis(m, w);
  const auto explicit_sum = polarization_sum_from_basis(basis);
  if (max_abs_diff(closed, explicit_sum) > polarization_sum_tolerance * std::max(1.0, frobenius_norm(closed)))
    throw invariant_violation("polarization sum: basis and closed form disagree");
  return closed;
}

// ---------------------------------------------------------------------------
// Four-momentum

// P = b^{-1} P_vac: the Minkowski four-momentum carried by a vacuum momentum.
inline RealFourVector map_four_momentum(const MediumSpec& m, const RealFourVector& p_vac) {
  return detail::b_times(m, -1, p_vac);
}

inline RealFourVector unmap_four_momentum(const MediumSpec& m, const RealFourVector& p) {
  return detail::b_times(m, 1, p);
}

// ---------------------------------------------------------------------------
// Singular-function support

struct SingularSupport {
  double residual;         // k^2 + kappa (k.V)^2, the delta-function argument
  int sign;                // epsilon(k.V): +1, -1, or 0 when k.V = 0
  double mapped_residual;  // l^2 with l = b k, the vacuum null-cone argument
};

inline SingularSupport singular_support(const MediumSpec& m, const RealFourVector& k) {
  const double residual = dispersion_residual(m, k);
  const double kV = dot(k, m.four_velocity());
  const auto l = detail::b_times(m, 1, k);
  const double l2 = dot(l, l);
  if (std::abs(l2 - residual) > 1e-10 * (1.0 + euclidean_norm_sq(k)))
    throw invariant_violation("singular_support: mapped and direct supports disagree");
  return {residual, kV > 0.0 ? 1 : (kV < 0.0 ? -1 : 0), l2};
}

}  // namespace movmed
