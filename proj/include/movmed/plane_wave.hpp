#pragma once

#include "tensor.hpp"

namespace movmed {

// Which root of the frequency quadratic a wave sits on: a is the upper sign,
// b the lower, none for waves not tied to a branch (off-shell probes).
enum class Branch { a, b, none };

// A(x) = polarization e^{-i k.x} + c.c.
//
// k carries contravariant components (omega, kvec); k.x = omega t - kvec.x.
struct PlaneWave {
  RealFourVector k;
  ComplexFourVector polarization;
  Branch branch = Branch::none;
};

}  // namespace movmed
