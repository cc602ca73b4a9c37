#pragma once

#include <stdexcept>
#include <string>

namespace kgbem {

/// Failure of a numerical procedure (as opposed to invalid input), e.g. a
/// linear system that is singular to working precision.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double pivot_magnitude)
      : std::runtime_error(what), pivot_magnitude_(pivot_magnitude) {}

  double pivot_magnitude() const { return pivot_magnitude_; }

 private:
  double pivot_magnitude_;
};

}  // namespace kgbem
