#pragma once

/* Four-vectors and rank-2 tensors over the flat metric diag(1,-1,-1,-1).

   Every object carries the variance of each of its indices.  Components are
   stored in that variance; contractions convert the operand as needed, so a
   caller can never contract two upper (or two lower) indices by accident. */

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <type_traits>

#include "errors.hpp"
#include "vec3.hpp"

namespace movmed {

enum class Index { upper, lower };

constexpr Index opposite(Index i) noexcept {
  return i == Index::upper ? Index::lower : Index::upper;
}

using complex = std::complex<double>;

template <class T>
concept Scalar = std::is_same_v<T, double> || std::is_same_v<T, complex>;

template <Scalar T, Scalar U>
using promote_t = std::conditional_t<std::is_same_v<T, complex> || std::is_same_v<U, complex>,
                                     complex, double>;

inline constexpr std::array<double, 4> metric_signs{1.0, -1.0, -1.0, -1.0};

template <Scalar T>
constexpr T conj_if(const T& x) {
  if constexpr (std::is_same_v<T, complex>)
    return std::conj(x);
  else
    return x;
}

// ---------------------------------------------------------------------------
// FourVector

template <Scalar T>
struct FourVector {
  std::array<T, 4> c{};
  Index variance = Index::upper;

  constexpr FourVector() = default;
  constexpr FourVector(std::array<T, 4> comps, Index var = Index::upper)
      : c(comps), variance(var) {}

  static constexpr FourVector upper(T x0, T x1, T x2, T x3) {
    return FourVector({x0, x1, x2, x3}, Index::upper);
  }
  static constexpr FourVector lower(T x0, T x1, T x2, T x3) {
    return FourVector({x0, x1, x2, x3}, Index::lower);
  }
  // (t, x) with contravariant components.
  static constexpr FourVector from_parts(T time, const std::array<T, 3>& space) {
    return upper(time, space[0], space[1], space[2]);
  }

  constexpr T& operator[](std::size_t i) { return c[i]; }
  constexpr const T& operator[](std::size_t i) const { return c[i]; }

  // Sign flips only, so raise/lower round trips are exact.
  constexpr FourVector as(Index target) const {
    if (target == variance) return *this;
    FourVector r(c, target);
    for (std::size_t i = 1; i < 4; ++i) r.c[i] = -c[i];
    return r;
  }
  constexpr FourVector raised() const { return as(Index::upper); }
  constexpr FourVector lowered() const { return as(Index::lower); }

  // Spatial part of the contravariant components.
  constexpr std::array<T, 3> spatial() const {
    const auto u = raised();
    return {u.c[1], u.c[2], u.c[3]};
  }
};

using RealFourVector = FourVector<double>;
using ComplexFourVector = FourVector<complex>;

template <Scalar T, Scalar U>
constexpr FourVector<promote_t<T, U>> operator+(const FourVector<T>& a, const FourVector<U>& b) {
  const auto bb = b.as(a.variance);
  FourVector<promote_t<T, U>> r;
  r.variance = a.variance;
  for (std::size_t i = 0; i < 4; ++i) r.c[i] = a.c[i] + bb.c[i];
  return r;
}

template <Scalar T, Scalar U>
constexpr FourVector<promote_t<T, U>> operator-(const FourVector<T>& a, const FourVector<U>& b) {
  const auto bb = b.as(a.variance);
  FourVector<promote_t<T, U>> r;
  r.variance = a.variance;
  for (std::size_t i = 0; i < 4; ++i) r.c[i] = a.c[i] - bb.c[i];
  return r;
}

template <Scalar S, Scalar T>
constexpr FourVector<promote_t<S, T>> operator*(S s, const FourVector<T>& a) {
  FourVector<promote_t<S, T>> r;
  r.variance = a.variance;
  for (std::size_t i = 0; i < 4; ++i) r.c[i] = s * a.c[i];
  return r;
}

template <Scalar T>
constexpr FourVector<T> operator-(const FourVector<T>& a) {
  return T(-1.0) * a;
}

template <Scalar T>
constexpr FourVector<T> conj(const FourVector<T>& a) {
  FourVector<T> r = a;
  for (auto& x : r.c) x = conj_if(x);
  return r;
}

inline ComplexFourVector to_complex(const RealFourVector& a) {
  ComplexFourVector r;
  r.variance = a.variance;
  for (std::size_t i = 0; i < 4; ++i) r.c[i] = a.c[i];
  return r;
}

inline RealFourVector real_part(const ComplexFourVector& a) {
  RealFourVector r;
  r.variance = a.variance;
  for (std::size_t i = 0; i < 4; ++i) r.c[i] = a.c[i].real();
  return r;
}

// Bilinear (not sesquilinear) Minkowski product u^0 v^0 - u.v.
template <Scalar T, Scalar U>
constexpr promote_t<T, U> dot(const FourVector<T>& u, const FourVector<U>& v) {
  const auto uu = u.raised();
  const auto vv = v.raised();
  promote_t<T, U> s{};
  for (std::size_t i = 0; i < 4; ++i) s += metric_signs[i] * uu.c[i] * vv.c[i];
  return s;
}

// Sum of |component|^2; independent of variance.
template <Scalar T>
double euclidean_norm_sq(const FourVector<T>& a) {
  double s = 0.0;
  for (const auto& x : a.c) s += std::norm(complex(x));
  return s;
}

template <Scalar T>
double euclidean_norm(const FourVector<T>& a) {
  return std::sqrt(euclidean_norm_sq(a));
}

template <Scalar T, Scalar U>
double max_abs_diff(const FourVector<T>& a, const FourVector<U>& b) {
  const auto bb = b.as(a.variance);
  double m = 0.0;
  for (std::size_t i = 0; i < 4; ++i) m = std::max(m, std::abs(complex(a.c[i]) - complex(bb.c[i])));
  return m;
}

// ---------------------------------------------------------------------------
// Tensor2

template <Scalar T>
struct Tensor2 {
  std::array<std::array<T, 4>, 4> c{};
  Index first = Index::lower;
  Index second = Index::lower;

  constexpr Tensor2() = default;
  constexpr Tensor2(Index f, Index s) : first(f), second(s) {}

  constexpr T& operator()(std::size_t mu, std::size_t nu) { return c[mu][nu]; }
  constexpr const T& operator()(std::size_t mu, std::size_t nu) const { return c[mu][nu]; }

  constexpr Tensor2 as(Index f, Index s) const {
    Tensor2 r = *this;
    r.first = f;
    r.second = s;
    const bool flip_row = f != first;
    const bool flip_col = s != second;
    for (std::size_t mu = 0; mu < 4; ++mu)
      for (std::size_t nu = 0; nu < 4; ++nu) {
        double sign = 1.0;
        if (flip_row) sign *= metric_signs[mu];
        if (flip_col) sign *= metric_signs[nu];
        r.c[mu][nu] = sign * c[mu][nu];
      }
    return r;
  }
  constexpr Tensor2 upper() const { return as(Index::upper, Index::upper); }
  constexpr Tensor2 lower() const { return as(Index::lower, Index::lower); }
};

using RealTensor2 = Tensor2<double>;
using ComplexTensor2 = Tensor2<complex>;

// g with the requested variances: diag(1,-1,-1,-1) when both indices agree,
// the identity when they are mixed.
template <Scalar T = double>
constexpr Tensor2<T> metric(Index f = Index::lower, Index s = Index::lower) {
  Tensor2<T> g(f, s);
  for (std::size_t mu = 0; mu < 4; ++mu) g.c[mu][mu] = (f == s) ? metric_signs[mu] : 1.0;
  return g;
}

template <Scalar T, Scalar U>
constexpr Tensor2<promote_t<T, U>> outer(const FourVector<T>& u, const FourVector<U>& v) {
  Tensor2<promote_t<T, U>> r(u.variance, v.variance);
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu) r.c[mu][nu] = u.c[mu] * v.c[nu];
  return r;
}

template <Scalar T>
constexpr Tensor2<T> transpose(const Tensor2<T>& t) {
  Tensor2<T> r(t.second, t.first);
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu) r.c[mu][nu] = t.c[nu][mu];
  return r;
}

template <Scalar T, Scalar U>
constexpr Tensor2<promote_t<T, U>> operator+(const Tensor2<T>& a, const Tensor2<U>& b) {
  const auto bb = b.as(a.first, a.second);
  Tensor2<promote_t<T, U>> r(a.first, a.second);
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu) r.c[mu][nu] = a.c[mu][nu] + bb.c[mu][nu];
  return r;
}

template <Scalar T, Scalar U>
constexpr Tensor2<promote_t<T, U>> operator-(const Tensor2<T>& a, const Tensor2<U>& b) {
  const auto bb = b.as(a.first, a.second);
  Tensor2<promote_t<T, U>> r(a.first, a.second);
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu) r.c[mu][nu] = a.c[mu][nu] - bb.c[mu][nu];
  return r;
}

template <Scalar S, Scalar T>
constexpr Tensor2<promote_t<S, T>> operator*(S s, const Tensor2<T>& a) {
  Tensor2<promote_t<S, T>> r(a.first, a.second);
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu) r.c[mu][nu] = s * a.c[mu][nu];
  return r;
}

template <Scalar T>
constexpr Tensor2<T> conj(const Tensor2<T>& a) {
  Tensor2<T> r = a;
  for (auto& row : r.c)
    for (auto& x : row) x = conj_if(x);
  return r;
}

inline ComplexTensor2 to_complex(const RealTensor2& a) {
  ComplexTensor2 r(a.first, a.second);
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu) r.c[mu][nu] = a.c[mu][nu];
  return r;
}

inline RealTensor2 real_part(const ComplexTensor2& a) {
  RealTensor2 r(a.first, a.second);
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu) r.c[mu][nu] = a.c[mu][nu].real();
  return r;
}

// t^{mu}{}_{nu} v^{nu}: contracts the second index of t with v.
template <Scalar T, Scalar U>
constexpr FourVector<promote_t<T, U>> act(const Tensor2<T>& t, const FourVector<U>& v) {
  const auto vv = v.as(opposite(t.second));
  FourVector<promote_t<T, U>> r;
  r.variance = t.first;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    promote_t<T, U> s{};
    for (std::size_t nu = 0; nu < 4; ++nu) s += t.c[mu][nu] * vv.c[nu];
    r.c[mu] = s;
  }
  return r;
}

// Matrix product a_{mu}{}^{rho} b_{rho nu}: contracts a's second index with
// b's first.
template <Scalar T, Scalar U>
constexpr Tensor2<promote_t<T, U>> compose(const Tensor2<T>& a, const Tensor2<U>& b) {
  const auto bb = b.as(opposite(a.second), b.second);
  Tensor2<promote_t<T, U>> r(a.first, b.second);
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu) {
      promote_t<T, U> s{};
      for (std::size_t rho = 0; rho < 4; ++rho) s += a.c[mu][rho] * bb.c[rho][nu];
      r.c[mu][nu] = s;
    }
  return r;
}

// Full contraction a_{mu nu} b^{mu nu}.
template <Scalar T, Scalar U>
constexpr promote_t<T, U> contract(const Tensor2<T>& a, const Tensor2<U>& b) {
  const auto bb = b.as(opposite(a.first), opposite(a.second));
  promote_t<T, U> s{};
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu) s += a.c[mu][nu] * bb.c[mu][nu];
  return s;
}

// t_{mu}{}^{mu}
template <Scalar T>
constexpr T trace(const Tensor2<T>& t) {
  const auto m = t.as(t.first, opposite(t.first));
  T s{};
  for (std::size_t mu = 0; mu < 4; ++mu) s += m.c[mu][mu];
  return s;
}

template <Scalar T, Scalar U>
double max_abs_diff(const Tensor2<T>& a, const Tensor2<U>& b) {
  const auto bb = b.as(a.first, a.second);
  double m = 0.0;
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu)
      m = std::max(m, std::abs(complex(a.c[mu][nu]) - complex(bb.c[mu][nu])));
  return m;
}

template <Scalar T>
double frobenius_norm(const Tensor2<T>& a) {
  double s = 0.0;
  for (const auto& row : a.c)
    for (const auto& x : row) s += std::norm(complex(x));
  return std::sqrt(s);
}

template <Scalar T>
bool is_antisymmetric(const Tensor2<T>& t, double tol = 0.0) {
  const auto m = t.as(t.first, t.first);
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = mu; nu < 4; ++nu)
      if (std::abs(complex(m.c[mu][nu]) + complex(m.c[nu][mu])) > tol) return false;
  return true;
}

template <Scalar T>
bool is_symmetric(const Tensor2<T>& t, double tol = 0.0) {
  const auto m = t.as(t.first, t.first);
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = mu + 1; nu < 4; ++nu)
      if (std::abs(complex(m.c[mu][nu]) - complex(m.c[nu][mu])) > tol) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Velocities and boosts (natural units, c = 1)

inline void require_subluminal(const Vec3& v) {
  const double speed = norm3(v);
  if (!(speed < 1.0)) throw domain_error("superluminal medium velocity");
}

inline double lorentz_gamma(const Vec3& v) {
  require_subluminal(v);
  return 1.0 / std::sqrt(1.0 - dot3(v, v));
}

// gamma (1, v), contravariant.
inline RealFourVector four_velocity(const Vec3& v) {
  const double g = lorentz_gamma(v);
  return RealFourVector::upper(g, g * v[0], g * v[1], g * v[2]);
}

// Lambda^{mu}{}_{nu} taking rest-frame components to a frame in which the
// rest frame moves with velocity v: Lambda (1,0,0,0) = gamma (1, v).
inline RealTensor2 boost_matrix(const Vec3& v) {
  const double g = lorentz_gamma(v);
  RealTensor2 L(Index::upper, Index::lower);
  L.c[0][0] = g;
  for (std::size_t i = 0; i < 3; ++i) {
    L.c[0][i + 1] = g * v[i];
    L.c[i + 1][0] = g * v[i];
    for (std::size_t j = 0; j < 3; ++j) {
      const double kron = (i == j) ? 1.0 : 0.0;
      // (gamma - 1)/v^2 = gamma^2/(gamma + 1), finite at v = 0.
      L.c[i + 1][j + 1] = kron + (g * g / (g + 1.0)) * v[i] * v[j];
    }
  }
  return L;
}

// Transforms x by a Lorentz matrix Lambda^{mu}{}_{nu}, preserving x's variance.
template <Scalar T>
FourVector<T> lorentz_transform(const RealTensor2& boost, const FourVector<T>& x) {
  const auto up = act(boost.as(Index::upper, Index::lower), x.raised());
  return FourVector<T>(up.c, Index::upper).as(x.variance);
}

template <Scalar T>
Tensor2<T> lorentz_transform(const RealTensor2& boost, const Tensor2<T>& t) {
  const auto L = boost.as(Index::upper, Index::lower);
  const auto up = compose(compose(L, t.upper()), transpose(L));
  Tensor2<T> r(Index::upper, Index::upper);
  r.c = up.c;
  return r.as(t.first, t.second);
}

}  // namespace movmed
