#pragma once

#include <array>
#include <cmath>

namespace movmed {

using Vec3 = std::array<double, 3>;

inline constexpr double dot3(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline constexpr Vec3 cross3(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

inline double norm3(const Vec3& a) { return std::sqrt(dot3(a, a)); }

inline constexpr Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

inline constexpr Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline constexpr Vec3 operator*(double s, const Vec3& a) {
  return {s * a[0], s * a[1], s * a[2]};
}

inline constexpr Vec3 operator*(const Vec3& a, double s) { return s * a; }

// Unit vector perpendicular to a (a need not be normalized, must be nonzero).
inline Vec3 any_perpendicular(const Vec3& a) {
  // Cross with the axis least aligned with a.
  const double ax = std::abs(a[0]), ay = std::abs(a[1]), az = std::abs(a[2]);
  Vec3 seed{0.0, 0.0, 0.0};
  if (ax <= ay && ax <= az)
    seed[0] = 1.0;
  else if (ay <= az)
    seed[1] = 1.0;
  else
    seed[2] = 1.0;
  Vec3 p = cross3(a, seed);
  return (1.0 / norm3(p)) * p;
}

}  // namespace movmed
