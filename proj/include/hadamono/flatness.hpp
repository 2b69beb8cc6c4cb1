#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hadamono/monotone.hpp"

namespace hadamono {

/// The default lambda schedule for convexity-type checks; includes 1/3, the
/// witness value of the spoke-tree counterexample.
std::vector<Rational> default_lambdas();

/// Explicit sampling data for the convexity-of-evaluations checks: lambda
/// values plus the base point (and an optional second base for the
/// base-independence check).
struct FlSample {
  std::vector<Rational> lambdas;
  Point base;
  std::optional<Point> base2;
};

/// Exact test of <x((1-lambda)x + lambda y), ab> == lambda <xy, ab>.
CheckReport check_flat_identity(const SpaceHandle& space, const Point& x, const Point& y,
                                const Point& a, const Point& b, const Rational& lambda);

/// Runs check_flat_identity over a deterministic pseudo-random schedule of
/// tuples. On the spoke tree the known violating tuple is injected first
/// (unless disabled), so the space is always reported non-flat; Euclidean
/// space passes every tuple.
CheckReport test_flatness(const SpaceHandle& space, std::uint64_t seed,
                          std::size_t n_samples, bool inject_known_witness = true);

/// Convexity of dual evaluations along domain geodesics: for every dual in
/// Range(M), points x, y in Dom(M) and lambda in the sample,
///   <xd, p((1-l)x+ly)>  <=  (1-l) <xd, px> + l <xd, py>     (exact).
/// The first violating tuple is reported as the witness.
CheckReport check_fl_property(const SpaceHandle& space, const PairSet& M,
                              const FlSample& sample);

/// Verdict agreement of check_fl_property at bases p and q over the same
/// tuples.
CheckReport check_fl_base_independence(const SpaceHandle& space, const PairSet& M,
                                       const Point& p, const Point& q,
                                       const std::vector<Rational>& lambdas);

/// Convexity of pi_p(., phi) on the given (a, b, lambda) triples, exact.
struct ConvexityTriple {
  Point a;
  Point b;
  Rational lambda;
};
CheckReport check_pi_convexity(const SpaceHandle& space, const DualElement& phi,
                               const Point& p, const std::vector<ConvexityTriple>& triples);

/// Converts a failing flat-identity tuple into a failing check_fl_property
/// input (base x, duals +-[ab] at both x and y). Returns the pair set, the
/// sample, and the sign chosen for the dual.
struct FlViolationInput {
  PairSet set;
  FlSample sample;
  int sign = 1;
};
FlViolationInput flat_to_fl_witness(const SpaceHandle& space, const Point& x, const Point& y,
                                    const Point& a, const Point& b, const Rational& lambda);

}  // namespace hadamono
