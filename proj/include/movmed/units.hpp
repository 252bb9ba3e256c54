#pragma once

// SI constants (CODATA 2018).  Only the forces module and the SI branch of
// photon_momentum leave natural units.
namespace movmed::si {

inline constexpr double speed_of_light = 2.99792458e8;       // m/s
inline constexpr double vacuum_permittivity = 8.8541878128e-12;  // F/m
inline constexpr double hbar = 1.054571817e-34;               // J s

}  // namespace movmed::si
