#include "hadamono/flatness.hpp"

#include <nlohmann/json.hpp>

#include "hadamono/errors.hpp"
#include "hadamono/sampler.hpp"

namespace hadamono {

std::vector<Rational> default_lambdas() {
  return {Rational(0),      Rational(1, 4), Rational(1, 3), Rational(1, 2),
          Rational(2, 3),   Rational(3, 4), Rational(1)};
}

namespace {

nlohmann::json tuple_json(const Point& x, const Point& y, const Point& a, const Point& b,
                          const Rational& lambda) {
  return {{"x", x.describe()},
          {"y", y.describe()},
          {"a", a.describe()},
          {"b", b.describe()},
          {"lambda", format_rational(lambda)}};
}

}  // namespace

CheckReport check_flat_identity(const SpaceHandle& space, const Point& x, const Point& y,
                                const Point& a, const Point& b, const Rational& lambda) {
  const Point c = geodesic_point(space, x, y, lambda);
  const Rational lhs = qlin(space, BoundVector{x, c}, BoundVector{a, b});
  const Rational rhs = lambda * qlin(space, BoundVector{x, y}, BoundVector{a, b});
  CheckReport r;
  r.passed = lhs == rhs;
  r.lhs = lhs;
  r.rhs = rhs;
  r.relation = "==";
  if (!r.passed) r.witness = tuple_json(x, y, a, b, lambda).dump();
  return r;
}

CheckReport test_flatness(const SpaceHandle& space, std::uint64_t seed,
                          std::size_t n_samples, bool inject_known_witness) {
  std::vector<std::array<Point, 4>> tuples;
  std::vector<Rational> lambdas;

  if (space.kind == SpaceKind::SpokeTree && inject_known_witness) {
    // the known non-flatness witness of the spoke tree
    tuples.push_back({Point::spoke_point(2, Rational(1, 2)), Point::spoke_point(1, Rational(1, 2)),
                      Point::spoke_point(3, Rational(1, 3)), Point::spoke_point(2, Rational(1, 2))});
    lambdas.push_back(Rational(1, 4));
  }

  Sampler rng(seed);
  const auto lambda_pool = default_lambdas();
  for (std::size_t i = 0; i < n_samples; ++i) {
    tuples.push_back({rng.point(space), rng.point(space), rng.point(space), rng.point(space)});
    lambdas.push_back(lambda_pool[rng.below(lambda_pool.size())]);
  }

  std::size_t checked = 0;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    const auto& [x, y, a, b] = tuples[i];
    auto r = check_flat_identity(space, x, y, a, b, lambdas[i]);
    if (!r.passed) {
      r.note = "violation at tuple " + std::to_string(i);
      return r;
    }
    ++checked;
  }

  auto r = CheckReport::pass(0, 0, "==");
  if (checked == 0) {
    r.note = "inconclusive";
  } else {
    r.note = "all " + std::to_string(checked) + " tuples satisfied the identity";
  }
  return r;
}

CheckReport check_fl_property(const SpaceHandle& space, const PairSet& M,
                              const FlSample& sample) {
  validate_point(space, sample.base);
  for (const auto& lambda : sample.lambdas)
    if (lambda < 0 || lambda > 1)
      throw ValidationError("F_l lambda " + format_rational(lambda) + " outside [0,1]");

  if (M.empty()) {
    auto r = CheckReport::pass(0, 0, "<=");
    r.note = "vacuous (empty set)";
    return r;
  }

  const Point& p = sample.base;
  for (std::size_t di = 0; di < M.size(); ++di) {
    const DualElement& xd = M.pairs()[di].dual;
    for (const auto& mx : M.pairs())
      for (const auto& my : M.pairs()) {
        const Point& x = mx.point;
        const Point& y = my.point;
        for (const auto& lambda : sample.lambdas) {
          const Point c = geodesic_point(space, x, y, lambda);
          const Rational lhs = evaluate(space, xd, BoundVector{p, c});
          const Rational rhs = (1 - lambda) * evaluate(space, xd, BoundVector{p, x}) +
                               lambda * evaluate(space, xd, BoundVector{p, y});
          if (lhs > rhs) {
            auto r = CheckReport::fail(lhs, rhs, "<=");
            r.witness = nlohmann::json{{"dual_index", di},
                                       {"x", x.describe()},
                                       {"y", y.describe()},
                                       {"lambda", format_rational(lambda)},
                                       {"geodesic_point", c.describe()},
                                       {"base", p.describe()}}
                            .dump();
            return r;
          }
        }
      }
  }
  return CheckReport::pass(0, 0, "<=");
}

CheckReport check_fl_base_independence(const SpaceHandle& space, const PairSet& M,
                                       const Point& p, const Point& q,
                                       const std::vector<Rational>& lambdas) {
  const auto at_p = check_fl_property(space, M, FlSample{lambdas, p, {}});
  const auto at_q = check_fl_property(space, M, FlSample{lambdas, q, {}});
  CheckReport r;
  r.passed = at_p.passed == at_q.passed;
  r.relation = "==";
  r.note = std::string("verdict at first base: ") + (at_p.passed ? "pass" : "fail") +
           ", at second base: " + (at_q.passed ? "pass" : "fail");
  if (!r.passed)
    r.witness = nlohmann::json{{"base_p", p.describe()}, {"base_q", q.describe()}}.dump();
  return r;
}

CheckReport check_pi_convexity(const SpaceHandle& space, const DualElement& phi,
                               const Point& p, const std::vector<ConvexityTriple>& triples) {
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const auto& [a, b, lambda] = triples[i];
    const Point c = geodesic_point(space, a, b, lambda);
    const Rational lhs = coupling(space, p, c, phi);
    const Rational rhs =
        (1 - lambda) * coupling(space, p, a, phi) + lambda * coupling(space, p, b, phi);
    if (lhs > rhs) {
      auto r = CheckReport::fail(lhs, rhs, "<=");
      r.witness = nlohmann::json{{"triple", i},
                                 {"a", a.describe()},
                                 {"b", b.describe()},
                                 {"lambda", format_rational(lambda)}}
                      .dump();
      return r;
    }
  }
  return CheckReport::pass(0, 0, "<=");
}

FlViolationInput flat_to_fl_witness(const SpaceHandle& space, const Point& x, const Point& y,
                                    const Point& a, const Point& b, const Rational& lambda) {
  const auto base = check_flat_identity(space, x, y, a, b, lambda);
  if (base.passed) throw ValidationError("flat_to_fl_witness: tuple satisfies the identity");

  // With base point x the F_l inequality for x_dual = sign*[ab] reads
  // sign*(<x c, ab> - lambda <xy, ab>) <= 0, so the violating sign is the
  // sign of the identity defect.
  const int sign = base.lhs > base.rhs ? 1 : -1;
  DualElement xd = DualElement::single(sign, 1, a, b);

  PairSet M(space);
  M.add(Pair{x, xd});
  if (!(y == x)) M.add(Pair{y, xd});
  return FlViolationInput{std::move(M), FlSample{{lambda}, x, {}}, sign};
}

}  // namespace hadamono
