#pragma once

#include <cstdint>

namespace tiltfactor {

// Cost guards for potentially explosive computations. Orbit enumeration is
// bounded by element count; tensor products by the estimated number of
// weight-pair operations (the product of the factor dimensions).
struct Budget {
  std::uint64_t orbit_limit = 1'000'000;
  std::uint64_t convolution_limit = 100'000'000;

  // A single scalar override sets both limits (CLI --budget / env var).
  static Budget from_scalar(std::uint64_t v) { return Budget{v, v}; }
};

}  // namespace tiltfactor
