#pragma once

#include <vector>

#include "hadamono/quasilin.hpp"

namespace hadamono {

/// One formal summand alpha * [t * (tail head)] of a linear-dual element.
struct DualTerm {
  Rational alpha = 1;
  Rational t = 1;
  Point tail;
  Point head;

  bool operator==(const DualTerm&) const = default;
};

/// Formal finite sum of scaled bound-vector classes. No quotienting is
/// applied; two elements that evaluate identically are still distinct term
/// lists (equivalence is only ever tested against witnesses).
struct DualElement {
  std::vector<DualTerm> terms;

  static DualElement zero() { return {}; }
  static DualElement single(Rational alpha, Rational t, Point tail, Point head);
  /// [tail head] with unit weights, the workhorse constructor.
  static DualElement of(Point tail, Point head);

  bool is_zero() const { return terms.empty(); }
  bool operator==(const DualElement&) const = default;
};

DualElement operator+(const DualElement& a, const DualElement& b);
DualElement operator-(const DualElement& a, const DualElement& b);
DualElement operator*(const Rational& scalar, const DualElement& a);
DualElement operator-(const DualElement& a);

/// <phi, v> = sum_i alpha_i t_i <a_i b_i, v>, exact.
Rational evaluate(const SpaceHandle& space, const DualElement& phi, const BoundVector& v);

/// p-coupling function pi_p(x, phi) = <phi, px>.
Rational coupling(const SpaceHandle& space, const Point& p, const Point& x,
                  const DualElement& phi);

/// Exact norm of a single-term element: |alpha * t| * d(a, b).
double norm_single(const SpaceHandle& space, const Rational& alpha, const Rational& t,
                   const Point& a, const Point& b);

/// Certified lower bound for the dual norm: max over witness quadruples
/// (a,b,c,d) with (a,c) != (b,d) of |<phi,ab> - <phi,cd>| / (d(a,b)+d(c,d)).
/// Never exceeds the true norm. Throws if the witnesses admit no quadruple
/// (fewer than two distinct points).
double norm_lower_bound(const SpaceHandle& space, const DualElement& phi,
                        const std::vector<Point>& witnesses);

/// True iff phi and psi evaluate identically on every bound vector drawn
/// from W x W (exact). Sound as a refutation of equivalence; confirmation is
/// relative to the witness set.
bool equiv_on_witnesses(const SpaceHandle& space, const DualElement& phi,
                        const DualElement& psi, const std::vector<Point>& witnesses);

/// Euclidean canonical form: sum_i alpha_i t_i (head_i - tail_i). Two
/// Euclidean elements are equivalent iff their reductions are equal.
std::vector<Rational> reduce_euclidean(const SpaceHandle& space, const DualElement& phi);

}  // namespace hadamono
