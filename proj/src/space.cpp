#include "hadamono/space.hpp"

#include <cmath>
#include <utility>

#include "hadamono/errors.hpp"

namespace hadamono {

SpaceHandle SpaceHandle::euclidean(int dim) {
  if (dim < 1) throw ValidationError("Euclidean dimension must be >= 1");
  return {SpaceKind::Euclidean, dim};
}

std::string SpaceHandle::describe() const {
  if (kind == SpaceKind::SpokeTree) return "spoke-tree";
  return "euclidean(" + std::to_string(dim) + ")";
}

Point Point::spoke_point(std::uint32_t spoke, Rational radius) {
  Point p;
  p.kind = SpaceKind::SpokeTree;
  if (radius == 0) {
    p.spoke = 0;  // quotient identification: all (n, 0) are the root
    p.radius = 0;
  } else {
    p.spoke = spoke;
    p.radius = std::move(radius);
  }
  return p;
}

Point Point::root() { return spoke_point(0, 0); }

Point Point::euclidean_point(std::vector<Rational> coords) {
  Point p;
  p.kind = SpaceKind::Euclidean;
  p.coords = std::move(coords);
  return p;
}

std::string Point::describe() const {
  if (kind == SpaceKind::SpokeTree)
    return "[(" + std::to_string(spoke) + "," + format_rational(radius) + ")]";
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ',';
    out += format_rational(coords[i]);
  }
  return out + ")";
}

void validate_point(const SpaceHandle& space, const Point& p) {
  if (p.kind != space.kind)
    throw ValidationError("point of kind " +
                          std::string(p.kind == SpaceKind::SpokeTree ? "spoke-tree" : "euclidean") +
                          " used in space " + space.describe());
  if (space.kind == SpaceKind::SpokeTree) {
    if (p.radius < 0 || p.radius > 1)
      throw ValidationError("spoke radius " + format_rational(p.radius) + " outside [0,1]");
    if (p.radius == 0 && p.spoke != 0)
      throw ValidationError("non-canonical root: radius 0 with spoke " + std::to_string(p.spoke));
  } else {
    if (static_cast<int>(p.coords.size()) != space.dim)
      throw ValidationError("point has " + std::to_string(p.coords.size()) +
                            " coordinates, space has dimension " + std::to_string(space.dim));
  }
}

namespace {

Rational square(const Rational& x) { return x * x; }

}  // namespace

Rational dist_sq(const SpaceHandle& space, const Point& p, const Point& q) {
  validate_point(space, p);
  validate_point(space, q);
  if (space.kind == SpaceKind::SpokeTree) {
    if (p.spoke == q.spoke) return square(p.radius - q.radius);
    return square(p.radius + q.radius);
  }
  Rational acc = 0;
  for (int i = 0; i < space.dim; ++i) acc += square(p.coords[i] - q.coords[i]);
  return acc;
}

std::optional<Rational> dist_exact(const SpaceHandle& space, const Point& p, const Point& q) {
  const Rational dsq = dist_sq(space, p, q);
  if (space.kind == SpaceKind::SpokeTree) {
    // both metric branches are absolute values of rationals
    if (p.spoke == q.spoke) return abs(p.radius - q.radius);
    return p.radius + q.radius;
  }
  return exact_sqrt(dsq);
}

double dist(const SpaceHandle& space, const Point& p, const Point& q) {
  return std::sqrt(to_double(dist_sq(space, p, q)));
}

Point geodesic_point(const SpaceHandle& space, const Point& x, const Point& y,
                     const Rational& lambda) {
  validate_point(space, x);
  validate_point(space, y);
  if (lambda < 0 || lambda > 1)
    throw ValidationError("geodesic parameter " + format_rational(lambda) + " outside [0,1]");
  if (x == y) return x;

  if (space.kind == SpaceKind::Euclidean) {
    std::vector<Rational> coords(x.coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i)
      coords[i] = (1 - lambda) * x.coords[i] + lambda * y.coords[i];
    return Point::euclidean_point(std::move(coords));
  }

  const Rational& t = x.radius;
  const Rational& s = y.radius;
  if (x.spoke == y.spoke) {
    // same spoke (or a root endpoint with the other at spoke 0): the
    // injective path stays on the spoke
    return Point::spoke_point(x.spoke, (1 - lambda) * t + lambda * s);
  }
  // path through the root; the branch point is lambda = t / (t + s)
  if (lambda * (t + s) <= t) return Point::spoke_point(x.spoke, (1 - lambda) * t - lambda * s);
  return Point::spoke_point(y.spoke, (lambda - 1) * t + lambda * s);
}

CheckReport check_cn(const SpaceHandle& space, const Point& x, const Point& y,
                     const Point& z, const Rational& t) {
  const Point c = geodesic_point(space, x, y, t);
  const Rational lhs = dist_sq(space, z, c);
  const Rational rhs = (1 - t) * dist_sq(space, z, x) + t * dist_sq(space, z, y) -
                       t * (1 - t) * dist_sq(space, x, y);
  if (lhs <= rhs) return CheckReport::pass(lhs, rhs);
  return CheckReport::fail(lhs, rhs);
}

}  // namespace hadamono
