#pragma once

#include "hadamono/report.hpp"
#include "hadamono/space.hpp"

namespace hadamono {

/// Ordered pair of points of one space; tail -> head.
struct BoundVector {
  Point tail;
  Point head;

  static BoundVector of(Point tail, Point head) { return {std::move(tail), std::move(head)}; }
  static BoundVector zero_at(const Point& x) { return {x, x}; }
  BoundVector reversed() const { return {head, tail}; }

  bool operator==(const BoundVector&) const = default;
};

/// Quasilinearization pairing
///   <ab, cd> = (d(a,d)^2 + d(b,c)^2 - d(a,c)^2 - d(b,d)^2) / 2,
/// the surrogate inner product of the two bound vectors. Exact.
Rational qlin(const SpaceHandle& space, const BoundVector& v, const BoundVector& w);

/// Verifies <v,w> <= d(v) d(w) without leaving rational arithmetic: a
/// non-positive pairing passes outright, otherwise the squares are compared.
/// When both distances happen to be rational the report carries the bound
/// itself; otherwise it carries the squared comparison (see note field).
CheckReport check_cauchy_schwarz(const SpaceHandle& space, const BoundVector& v,
                                 const BoundVector& w);

}  // namespace hadamono
