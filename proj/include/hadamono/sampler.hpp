#pragma once

#include <cstdint>

#include "hadamono/dual.hpp"

namespace hadamono {

/// Deterministic pseudo-random source (splitmix64). Self-contained so that
/// sampled schedules are reproducible across platforms and standard
/// libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform integer in [lo, hi] inclusive.
  long pick(long lo, long hi);

  /// Rational in [0, 1] with denominator <= max_den.
  Rational unit_rational(unsigned max_den = 12);
  /// Rational in [-range, range] with denominator <= max_den.
  Rational signed_rational(long range = 8, unsigned max_den = 8);

  /// Random canonical point: spoke index <= max_spoke on the tree, or
  /// coordinates from signed_rational on Euclidean space.
  Point point(const SpaceHandle& space, unsigned max_spoke = 5);

  /// Random dual element with up to max_terms single bound-vector terms.
  DualElement dual(const SpaceHandle& space, unsigned max_terms = 2, unsigned max_spoke = 5);

 private:
  std::uint64_t state_;
};

}  // namespace hadamono
