#pragma once

#include <stdexcept>
#include <string>

namespace movmed {

// Input outside the domain of an operation (superluminal velocity, non-null
// photon, reflectivity outside [0,1], ...).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Configuration where a closed form divides by zero, e.g. l.V = 0.
class singular_configuration : public domain_error {
 public:
  using domain_error::domain_error;
};

class gauge_condition_error : public domain_error {
 public:
  using domain_error::domain_error;
};

class continuity_violation : public domain_error {
 public:
  using domain_error::domain_error;
};

// Two routes to the same quantity disagree. Always a bug in the library
// (usually an index-variance slip), never a user error.
class invariant_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace movmed
