#pragma once

/* Isotropic nondispersive medium moving with constant four-velocity V.

   Component tables (contravariant components, natural units):

     x^mu = (t, x)          V^mu = gamma (1, v)         k^mu = (omega, kvec)

     F^{i0} = E_i           H^{i0} = D_i
     F^{12} = -B_3          H^{12} = -H_3
     F^{23} = -B_1          H^{23} = -H_1
     F^{31} = -B_2          H^{31} = -H_2

   Purely spatial components are unchanged by lowering both indices, so the
   F_{ij} table reads the same with lower indices; F_{i0} = -E_i. */

#include <cmath>
#include <complex>
#include <cstdlib>

#include "errors.hpp"
#include "plane_wave.hpp"
#include "tensor.hpp"
#include "vec3.hpp"

namespace movmed {

class MediumSpec {
 public:
  MediumSpec(double n, double mu, const Vec3& velocity) : n_(n), mu_(mu), velocity_(velocity) {
    if (!(n > 0.0) || !std::isfinite(n)) throw domain_error("refractive index must be positive");
    if (!(mu > 0.0) || !std::isfinite(mu)) throw domain_error("permeability must be positive");
    V_ = movmed::four_velocity(velocity);
  }

  static MediumSpec at_rest(double n, double mu = 1.0) { return MediumSpec(n, mu, {0.0, 0.0, 0.0}); }

  static MediumSpec from_four_velocity(double n, double mu, const RealFourVector& V) {
    const auto u = V.raised();
    return MediumSpec(n, mu, {u[1] / u[0], u[2] / u[0], u[3] / u[0]});
  }

  double n() const { return n_; }
  double mu() const { return mu_; }
  double epsilon() const { return n_ * n_ / mu_; }
  double kappa() const { return n_ * n_ - 1.0; }
  // Amplitude scale between vacuum and medium potentials, (n/mu)^{1/2}.
  double rho() const { return std::sqrt(n_ / mu_); }
  const Vec3& velocity() const { return velocity_; }
  const RealFourVector& four_velocity() const { return V_; }
  double gamma() const { return V_[0]; }

  // |V_spatial|^2 = gamma^2 v^2
  double spatial_four_velocity_sq() const {
    return V_[1] * V_[1] + V_[2] * V_[2] + V_[3] * V_[3];
  }

 private:
  double n_;
  double mu_;
  Vec3 velocity_;
  RealFourVector V_;
};

// n^p: repeated multiplication for small |p|, exp(p ln n) beyond.
inline double integer_power(double n, int p) {
  if (std::abs(p) > 8) return std::exp(p * std::log(n));
  double r = 1.0;
  for (int i = 0; i < std::abs(p); ++i) r *= n;
  return p < 0 ? 1.0 / r : r;
}

// (b^p)_{mu nu} = g_{mu nu} + (n^p - 1) V_mu V_nu, all-lower.  Mixed forms
// follow from .as(); b^p b^q = b^{p+q} as a mixed-index matrix product.
inline RealTensor2 b_power(const MediumSpec& m, int p) {
  const auto V = m.four_velocity().lowered();
  return metric() + (integer_power(m.n(), p) - 1.0) * outer(V, V);
}

inline RealTensor2 b_matrix(const MediumSpec& m) { return b_power(m, 1); }
inline RealTensor2 b_inverse(const MediumSpec& m) { return b_power(m, -1); }

// ---------------------------------------------------------------------------
// Field tensors

template <Scalar T>
struct FieldTensors {
  Tensor2<T> F;
  Tensor2<T> H;
};

template <Scalar T>
Tensor2<T> antisymmetric_from_vectors(const std::array<T, 3>& polar, const std::array<T, 3>& axial) {
  Tensor2<T> t(Index::upper, Index::upper);
  for (std::size_t i = 0; i < 3; ++i) {
    t.c[i + 1][0] = polar[i];
    t.c[0][i + 1] = -polar[i];
  }
  t.c[1][2] = -axial[2];
  t.c[2][1] = axial[2];
  t.c[2][3] = -axial[0];
  t.c[3][2] = axial[0];
  t.c[3][1] = -axial[1];
  t.c[1][3] = axial[1];
  return t;
}

// F from (E, B); also builds H from (D, H).
template <Scalar T>
Tensor2<T> field_tensor(const std::array<T, 3>& E, const std::array<T, 3>& B) {
  return antisymmetric_from_vectors(E, B);
}

// E (or D) from F (or H).
template <Scalar T>
std::array<T, 3> polar_part(const Tensor2<T>& t) {
  const auto u = t.upper();
  return {u.c[1][0], u.c[2][0], u.c[3][0]};
}

// B (or H) from F (or H).
template <Scalar T>
std::array<T, 3> axial_part(const Tensor2<T>& t) {
  const auto u = t.upper();
  return {-u.c[2][3], -u.c[3][1], -u.c[1][2]};
}

// mu H = F + kappa (F_alpha V_beta - F_beta V_alpha) with F_alpha = F_{alpha beta} V^beta.
template <Scalar T>
Tensor2<T> constitutive_H_direct(const MediumSpec& m, const Tensor2<T>& F) {
  const auto Fl = F.lower();
  const auto V = m.four_velocity();
  const auto Vl = V.lowered();
  const auto Fa = act(Fl, V);  // F_alpha
  const double kappa = m.kappa();
  Tensor2<T> H(Index::lower, Index::lower);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      H.c[a][b] = (Fl.c[a][b] + kappa * (Fa.c[a] * Vl.c[b] - Fa.c[b] * Vl.c[a])) / m.mu();
  return H.as(F.first, F.second);
}

// mu H_{alpha beta} = (b^2)_alpha^rho (b^2)_beta^sigma F_{rho sigma}.
template <Scalar T>
Tensor2<T> constitutive_H_compact(const MediumSpec& m, const Tensor2<T>& F) {
  const auto b2 = b_power(m, 2);
  const auto H = (1.0 / m.mu()) * compose(compose(b2, F), transpose(b2));
  return H.as(F.first, F.second);
}

inline constexpr double constitutive_tolerance = 1e-10;

// Evaluates both forms of the constitutive relation and requires them to
// agree; returns the compact form.
template <Scalar T>
Tensor2<T> constitutive_H(const MediumSpec& m, const Tensor2<T>& F) {
  const auto compact = constitutive_H_compact(m, F);
  const auto direct = constitutive_H_direct(m, F);
  const double scale = std::max(1.0, frobenius_norm(compact));
  if (max_abs_diff(compact, direct) > constitutive_tolerance * scale)
    throw invariant_violation("constitutive relation: direct and compact forms disagree");
  return compact;
}

template <Scalar T>
FieldTensors<T> fields_in_medium(const MediumSpec& m, const Tensor2<T>& F) {
  return {F, constitutive_H(m, F)};
}

// ---------------------------------------------------------------------------
// Potentials, gauge and field equation in momentum space

// Lambda^F = (b^2)^{mu nu} (-i k_mu) A_nu = -i [k.A + kappa (k.V)(A.V)].
inline complex gauge_scalar(const MediumSpec& m, const PlaneWave& wave) {
  const auto& V = m.four_velocity();
  const complex kA = dot(wave.k, wave.polarization);
  const complex AV = dot(wave.polarization, V);
  return complex(0.0, -1.0) * (kA + m.kappa() * dot(wave.k, V) * AV);
}

// [-k^2 - kappa (k.V)^2] A_mu, the momentum-space image of
// [box + kappa (V.d)^2] A = 0.
inline ComplexFourVector wave_equation_residual(const MediumSpec& m, const PlaneWave& wave) {
  const double kV = dot(wave.k, m.four_velocity());
  const double factor = -dot(wave.k, wave.k) - m.kappa() * kV * kV;
  return factor * wave.polarization;
}

// L = -1/4 F_{mu nu} H^{mu nu} - Lambda^2 / (2 mu).  Lambda is an input: the
// subsidiary condition Lambda = 0 is not enforced here.
template <Scalar T>
T lagrangian_density(const MediumSpec& m, const FieldTensors<T>& fields, T gauge) {
  return -0.25 * contract(fields.F, fields.H) - gauge * gauge / (2.0 * m.mu());
}

// pi^mu = H^{mu 0} - (1/mu) (b^2)^{mu 0} Lambda, contravariant.
template <Scalar T>
FourVector<T> conjugate_momenta(const MediumSpec& m, const FieldTensors<T>& fields, T gauge) {
  const auto H = fields.H.upper();
  const auto b2 = b_power(m, 2).upper();
  FourVector<T> pi;
  pi.variance = Index::upper;
  for (std::size_t mu = 0; mu < 4; ++mu) pi.c[mu] = H.c[mu][0] - b2.c[mu][0] * gauge / m.mu();
  return pi;
}

}  // namespace movmed
