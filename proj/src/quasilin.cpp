#include "hadamono/quasilin.hpp"

#include <nlohmann/json.hpp>

namespace hadamono {

Rational qlin(const SpaceHandle& space, const BoundVector& v, const BoundVector& w) {
  const Point& a = v.tail;
  const Point& b = v.head;
  const Point& c = w.tail;
  const Point& d = w.head;
  return (dist_sq(space, a, d) + dist_sq(space, b, c) - dist_sq(space, a, c) -
          dist_sq(space, b, d)) /
         2;
}

CheckReport check_cauchy_schwarz(const SpaceHandle& space, const BoundVector& v,
                                 const BoundVector& w) {
  const Rational value = qlin(space, v, w);
  const Rational dv = dist_sq(space, v.tail, v.head);
  const Rational dw = dist_sq(space, w.tail, w.head);
  const bool ok = value <= 0 || value * value <= dv * dw;

  const auto ev = dist_exact(space, v.tail, v.head);
  const auto ew = dist_exact(space, w.tail, w.head);
  CheckReport r;
  r.passed = ok;
  if (ev && ew) {
    r.lhs = value;
    r.rhs = *ev * *ew;
  } else {
    // irrational bound: report the sign-aware squared comparison instead
    r.lhs = value <= 0 ? value : value * value;
    r.rhs = dv * dw;
    r.note = "bound irrational; rhs is the squared bound d(v)^2 d(w)^2";
  }
  if (!ok)
    r.witness = nlohmann::json{{"v_tail", v.tail.describe()},
                               {"v_head", v.head.describe()},
                               {"w_tail", w.tail.describe()},
                               {"w_head", w.head.describe()}}
                    .dump();
  return r;
}

}  // namespace hadamono
