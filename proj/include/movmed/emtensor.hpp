#pragma once

/* Energy-momentum tensors of the radiation field and the four-momentum of a
   single plane-wave mode.

   Tensors are returned all-lower.  P^mu = integral of S^{mu 0} over a cell;
   for a plane wave the cell is one wavelength along kvec with unit
   transverse area, and the integral is the cycle average times that volume.

   Cycle averages use the complex amplitudes directly: for
   X(x) = X^ e^{-i phi} + c.c. and a real bilinear form B,
   <B(X, Y)> = 2 Re B(X^, conj(Y^)). */

#include <cmath>
#include <numbers>
#include <string_view>

#include "dispersion.hpp"
#include "errors.hpp"
#include "medium.hpp"
#include "plane_wave.hpp"
#include "tensor.hpp"
#include "units.hpp"

namespace movmed {

// S^M_{mu nu} = -F_{mu alpha} H_nu^alpha + 1/4 g_{mu nu} F_{alpha beta} H^{alpha beta}
template <Scalar T>
Tensor2<T> minkowski_tensor(const Tensor2<T>& F, const Tensor2<T>& H) {
  const auto H_mixed = H.as(Index::lower, Index::upper);  // H_nu^alpha
  const auto FH = compose(F.lower(), transpose(H_mixed));
  return T(0.25) * contract(F, H) * metric<T>() - FH;
}

template <Scalar T>
Tensor2<T> minkowski_tensor(const FieldTensors<T>& fields) {
  return minkowski_tensor(fields.F, fields.H);
}

inline constexpr double gauge_tolerance = 1e-10;

// S^can_{mu nu} = -g_{mu nu} L + (dL / d d^nu A_alpha) d_mu A_alpha with
// Lambda^F = 0, where dL / d d^nu A_alpha = -H_nu^alpha.
//
// grad_A holds d_mu A_alpha (first index = derivative).  Only the Lambda^F = 0
// sector is accepted.
template <Scalar T>
Tensor2<T> canonical_tensor(const MediumSpec& m, const FieldTensors<T>& fields, const Tensor2<T>& grad_A) {
  const T gauge = contract(grad_A, b_power(m, 2));
  if (std::abs(gauge) > gauge_tolerance * std::max(1.0, frobenius_norm(grad_A)))
    throw gauge_condition_error("canonical_tensor: Lambda^F != 0");
  const T L = lagrangian_density(m, fields, T(0.0));
  const auto H_mixed = fields.H.as(Index::lower, Index::upper);
  const auto HdA = compose(grad_A.lower(), transpose(H_mixed));
  return (-L) * metric<T>() - HdA;
}

// ---------------------------------------------------------------------------
// Plane-wave fields

struct PlaneWaveAmplitudes {
  ComplexTensor2 F;
  ComplexTensor2 H;
  ComplexTensor2 grad_A;  // d_mu A_alpha
};

// Amplitudes of d A, F, H for A = a e^{-i k.x} + c.c.; d_mu -> -i k_mu.
inline PlaneWaveAmplitudes plane_wave_amplitudes(const MediumSpec& m, const PlaneWave& wave) {
  const auto kl = to_complex(wave.k.lowered());
  const auto grad = complex(0.0, -1.0) * outer(kl, wave.polarization.lowered());
  const auto F = grad - transpose(grad);
  return {F, constitutive_H(m, F), grad};
}

// Real fields at spacetime point x (contravariant or covariant).
struct PlaneWaveSample {
  FieldTensors<double> fields;
  RealTensor2 grad_A;
};

inline PlaneWaveSample plane_wave_sample(const PlaneWaveAmplitudes& amp, const RealFourVector& k,
                                         const RealFourVector& x) {
  const double phase = dot(k, x);
  const complex factor = 2.0 * std::exp(complex(0.0, -phase));
  return {{real_part(factor * amp.F), real_part(factor * amp.H)}, real_part(factor * amp.grad_A)};
}

inline PlaneWaveSample plane_wave_sample(const MediumSpec& m, const PlaneWave& wave, const RealFourVector& x) {
  return plane_wave_sample(plane_wave_amplitudes(m, wave), wave.k, x);
}

inline RealTensor2 cycle_averaged_minkowski(const MediumSpec& m, const PlaneWave& wave) {
  const auto amp = plane_wave_amplitudes(m, wave);
  return 2.0 * real_part(minkowski_tensor(amp.F, conj(amp.H)));
}

inline RealTensor2 cycle_averaged_canonical(const MediumSpec& m, const PlaneWave& wave) {
  const auto amp = plane_wave_amplitudes(m, wave);
  return 2.0 * real_part(canonical_tensor(m, FieldTensors<complex>{amp.F, conj(amp.H)}, amp.grad_A));
}

// ---------------------------------------------------------------------------
// Momentum reports

enum class CausalClass { timelike, spacelike, null };
enum class MomentumSource { minkowski_tensor, canonical_tensor, mode_formula };

inline std::string_view to_string(CausalClass c) {
  switch (c) {
    case CausalClass::timelike: return "timelike";
    case CausalClass::spacelike: return "spacelike";
    case CausalClass::null: return "null";
  }
  return "unknown";
}

inline std::string_view to_string(MomentumSource s) {
  switch (s) {
    case MomentumSource::minkowski_tensor: return "minkowski_tensor";
    case MomentumSource::canonical_tensor: return "canonical_tensor";
    case MomentumSource::mode_formula: return "mode_formula";
  }
  return "unknown";
}

inline constexpr double causal_tolerance = 1e-10;

inline CausalClass classify_momentum(const RealFourVector& p) {
  const double pp = dot(p, p);
  if (std::abs(pp) <= causal_tolerance * euclidean_norm_sq(p)) return CausalClass::null;
  return pp > 0.0 ? CausalClass::timelike : CausalClass::spacelike;
}

struct MomentumReport {
  RealFourVector P;  // contravariant (energy, momentum)
  double p_squared = 0.0;
  CausalClass causal = CausalClass::null;
  MomentumSource source = MomentumSource::minkowski_tensor;
};

inline MomentumReport make_momentum_report(const RealFourVector& p, MomentumSource source) {
  const auto up = p.raised();
  return {up, dot(up, up), classify_momentum(up), source};
}

// One wavelength along kvec times unit transverse area.
inline double plane_wave_cell_volume(const PlaneWave& wave) {
  const double kmag = norm3(wave.k.spatial());
  if (kmag == 0.0) throw domain_error("plane wave has no spatial period");
  return 2.0 * std::numbers::pi / kmag;
}

inline MomentumReport cell_four_momentum(const MediumSpec& m, const PlaneWave& wave, MomentumSource source) {
  if (!on_shell(m, wave.k)) throw domain_error("cell_four_momentum: wave is off the dispersion shell");
  const double volume = plane_wave_cell_volume(wave);
  RealFourVector p;
  if (source == MomentumSource::mode_formula) {
    // <S_{mu nu}> = -(2/mu) k_mu (b^2 k)_nu (a.b^2 a*) on shell with Lambda^F = 0.
    if (std::abs(gauge_scalar(m, wave)) > gauge_tolerance * std::max(1.0, euclidean_norm(wave.k)) *
                                               std::max(1.0, euclidean_norm(wave.polarization)))
      throw gauge_condition_error("cell_four_momentum: Lambda^F != 0");
    const auto b2 = b_power(m, 2);
    const double K0 = act(b2, wave.k).raised()[0];
    const double ab2a = std::real(dot(wave.polarization, act(b2, conj(wave.polarization))));
    p = (-(2.0 / m.mu()) * K0 * ab2a * volume) * wave.k.raised();
  } else {
    const auto S = (source == MomentumSource::minkowski_tensor ? cycle_averaged_minkowski(m, wave)
                                                               : cycle_averaged_canonical(m, wave))
                       .upper();
    p = RealFourVector::upper(S(0, 0), S(1, 0), S(2, 0), S(3, 0));
    p = volume * p;
  }
  return make_momentum_report(p, source);
}

// ---------------------------------------------------------------------------
// Single-photon momentum

enum class UnitSystem { natural, si };

// n omega (natural units) or hbar n omega / c (SI, kg m/s).
inline double photon_momentum(double n, double omega, UnitSystem units = UnitSystem::natural) {
  if (!(n > 0.0)) throw domain_error("photon_momentum: refractive index must be positive");
  if (!(omega > 0.0)) throw domain_error("photon_momentum: angular frequency must be positive");
  if (units == UnitSystem::natural) return n * omega;
  return si::hbar * n * omega / si::speed_of_light;
}

}  // namespace movmed
