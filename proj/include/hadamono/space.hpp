#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hadamono/rational.hpp"
#include "hadamono/report.hpp"

namespace hadamono {

enum class SpaceKind { SpokeTree, Euclidean };

/// Handle for one of the two registered geodesic spaces: the spoke tree
/// (countably many unit segments glued at a common root) or flat Euclidean
/// space of a fixed dimension.
struct SpaceHandle {
  SpaceKind kind = SpaceKind::SpokeTree;
  int dim = 0;  // Euclidean only, >= 1

  static SpaceHandle spoke_tree() { return {SpaceKind::SpokeTree, 0}; }
  static SpaceHandle euclidean(int dim);

  bool operator==(const SpaceHandle&) const = default;
  std::string describe() const;
};

/// A point of either space. Spoke-tree points are [(spoke, radius)] with the
/// quotient identification radius == 0 -> root; the canonical root is
/// spoke 0, radius 0. Euclidean points are rational coordinate vectors.
///
/// Fields are public so that malformed points can be built and rejected by
/// validation; prefer the factories, which canonicalize.
struct Point {
  SpaceKind kind = SpaceKind::SpokeTree;
  std::uint32_t spoke = 0;
  Rational radius = 0;
  std::vector<Rational> coords;

  /// Canonicalizing factory: radius 0 collapses to the root [(0,0)].
  static Point spoke_point(std::uint32_t spoke, Rational radius);
  static Point root();
  static Point euclidean_point(std::vector<Rational> coords);

  bool operator==(const Point&) const = default;
  std::string describe() const;
};

/// Throws ValidationError unless p is a canonical member of the space
/// (radius in [0,1] and radius 0 only at spoke 0; coordinate count == dim).
void validate_point(const SpaceHandle& space, const Point& p);

/// Exact squared distance. Spoke metric: |t-s| on a common spoke, t+s
/// across spokes; Euclidean: sum of squared coordinate differences.
Rational dist_sq(const SpaceHandle& space, const Point& p, const Point& q);

/// Floating-point distance, sqrt of dist_sq.
double dist(const SpaceHandle& space, const Point& p, const Point& q);

/// Exact distance when it is rational: always on the spoke tree, and on
/// Euclidean space whenever dist_sq is a perfect square.
std::optional<Rational> dist_exact(const SpaceHandle& space, const Point& p, const Point& q);

/// The point (1-lambda) x (+) lambda y on the unique geodesic, lambda in [0,1].
Point geodesic_point(const SpaceHandle& space, const Point& x, const Point& y,
                     const Rational& lambda);

/// Evaluates the comparison inequality
///   d(z,c(t))^2 <= (1-t) d(z,x)^2 + t d(z,y)^2 - t(1-t) d(x,y)^2
/// exactly, where c is the geodesic from x to y.
CheckReport check_cn(const SpaceHandle& space, const Point& x, const Point& y,
                     const Point& z, const Rational& t);

}  // namespace hadamono
