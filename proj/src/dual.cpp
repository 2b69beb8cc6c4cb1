#include "hadamono/dual.hpp"

#include <cmath>
#include <cstdlib>

#include "hadamono/errors.hpp"

namespace hadamono {

DualElement DualElement::single(Rational alpha, Rational t, Point tail, Point head) {
  DualElement e;
  e.terms.push_back({std::move(alpha), std::move(t), std::move(tail), std::move(head)});
  return e;
}

DualElement DualElement::of(Point tail, Point head) {
  return single(1, 1, std::move(tail), std::move(head));
}

DualElement operator+(const DualElement& a, const DualElement& b) {
  DualElement out = a;
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  return out;
}

DualElement operator*(const Rational& scalar, const DualElement& a) {
  DualElement out = a;
  for (auto& term : out.terms) term.alpha *= scalar;
  return out;
}

DualElement operator-(const DualElement& a) { return Rational(-1) * a; }

DualElement operator-(const DualElement& a, const DualElement& b) { return a + (-b); }

Rational evaluate(const SpaceHandle& space, const DualElement& phi, const BoundVector& v) {
  Rational acc = 0;
  for (const auto& term : phi.terms)
    acc += term.alpha * term.t * qlin(space, BoundVector{term.tail, term.head}, v);
  return acc;
}

Rational coupling(const SpaceHandle& space, const Point& p, const Point& x,
                  const DualElement& phi) {
  return evaluate(space, phi, BoundVector{p, x});
}

double norm_single(const SpaceHandle& space, const Rational& alpha, const Rational& t,
                   const Point& a, const Point& b) {
  return std::abs(to_double(alpha * t)) * dist(space, a, b);
}

double norm_lower_bound(const SpaceHandle& space, const DualElement& phi,
                        const std::vector<Point>& witnesses) {
  if (witnesses.empty()) throw ValidationError("norm_lower_bound: empty witness set");
  const std::size_t n = witnesses.size();

  // cache evaluations on all witness bound vectors
  std::vector<Rational> eval(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      eval[i * n + j] = evaluate(space, phi, BoundVector{witnesses[i], witnesses[j]});

  double best = -1;
  for (std::size_t ia = 0; ia < n; ++ia)
    for (std::size_t ib = 0; ib < n; ++ib)
      for (std::size_t ic = 0; ic < n; ++ic)
        for (std::size_t id = 0; id < n; ++id) {
          if (witnesses[ia] == witnesses[ib] && witnesses[ic] == witnesses[id])
            continue;  // (a,c) == (b,d) excluded from the sup
          const Rational num = eval[ia * n + ib] - eval[ic * n + id];
          const double den =
              dist(space, witnesses[ia], witnesses[ib]) + dist(space, witnesses[ic], witnesses[id]);
          const double q = std::abs(to_double(num)) / den;
          if (q > best) best = q;
        }
  if (best < 0)
    throw ValidationError("norm_lower_bound: witnesses contain no two distinct points");
  return best;
}

bool equiv_on_witnesses(const SpaceHandle& space, const DualElement& phi,
                        const DualElement& psi, const std::vector<Point>& witnesses) {
  if (witnesses.empty()) throw ValidationError("equiv_on_witnesses: empty witness set");
  for (const auto& x : witnesses)
    for (const auto& y : witnesses) {
      const BoundVector v{x, y};
      if (evaluate(space, phi, v) != evaluate(space, psi, v)) return false;
    }
  return true;
}

std::vector<Rational> reduce_euclidean(const SpaceHandle& space, const DualElement& phi) {
  if (space.kind != SpaceKind::Euclidean)
    throw ValidationError("reduce_euclidean requires a Euclidean space");
  std::vector<Rational> acc(space.dim, Rational(0));
  for (const auto& term : phi.terms) {
    validate_point(space, term.tail);
    validate_point(space, term.head);
    for (int i = 0; i < space.dim; ++i)
      acc[i] += term.alpha * term.t * (term.head.coords[i] - term.tail.coords[i]);
  }
  return acc;
}

}  // namespace hadamono
