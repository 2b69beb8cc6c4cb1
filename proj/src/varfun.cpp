#include "hadamono/varfun.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <set>

#include "hadamono/errors.hpp"
#include "hadamono/sampler.hpp"

namespace hadamono {

Objective Objective::sq_dist(Point anchor, Rational scale) {
  Objective f;
  f.op = Op::SqDist;
  f.anchor = std::move(anchor);
  f.scale = std::move(scale);
  return f;
}

Objective Objective::coupling_term(Point base, DualElement dual) {
  Objective f;
  f.op = Op::Coupling;
  f.base = std::move(base);
  f.dual = std::move(dual);
  return f;
}

Objective Objective::constant(Rational value) {
  Objective f;
  f.op = Op::Const;
  f.value = std::move(value);
  return f;
}

Objective Objective::sum(std::vector<Objective> terms) {
  Objective f;
  f.op = Op::Add;
  f.args = std::move(terms);
  return f;
}

bool Objective::has_coupling() const {
  if (op == Op::Coupling) return true;
  if (op == Op::Add)
    return std::any_of(args.begin(), args.end(),
                       [](const Objective& g) { return g.has_coupling(); });
  return false;
}

void validate_objective(const SpaceHandle& space, const Objective& f) {
  switch (f.op) {
    case Objective::Op::Add:
      for (const auto& g : f.args) validate_objective(space, g);
      return;
    case Objective::Op::SqDist:
      validate_point(space, f.anchor);
      if (f.scale <= 0)
        throw ValidationError("sqdist scale must be positive, got " + format_rational(f.scale));
      return;
    case Objective::Op::Coupling:
      validate_point(space, f.base);
      for (const auto& term : f.dual.terms) {
        validate_point(space, term.tail);
        validate_point(space, term.head);
      }
      return;
    case Objective::Op::Const:
      return;
  }
}

Rational eval_objective(const SpaceHandle& space, const Objective& f, const Point& z) {
  switch (f.op) {
    case Objective::Op::Add: {
      Rational acc = 0;
      for (const auto& g : f.args) acc += eval_objective(space, g, z);
      return acc;
    }
    case Objective::Op::SqDist:
      return f.scale * dist_sq(space, f.anchor, z);
    case Objective::Op::Coupling:
      return coupling(space, f.base, z, f.dual);
    case Objective::Op::Const:
      return f.value;
  }
  throw std::logic_error("unreachable");
}

GridInf grid_inf(const SpaceHandle& space, const Objective& f, const Point& x,
                 const DualElement& x_dual, const DualElement& y_dual,
                 const std::vector<Point>& grid) {
  if (grid.empty()) throw ValidationError("grid_inf: empty grid");
  const DualElement psi = x_dual + y_dual;
  std::optional<Rational> best;
  const Point* argmin = nullptr;
  for (const auto& y : grid) {
    const Rational value =
        eval_objective(space, f, y) + evaluate(space, psi, BoundVector{y, x});
    if (!best || value < *best) {
      best = value;
      argmin = &y;
    }
  }
  return GridInf{*best, *argmin};
}

QuadForm quad_form(const SpaceHandle& space, const Objective& f) {
  if (space.kind != SpaceKind::Euclidean)
    throw ValidationError("quad_form requires a Euclidean space");
  QuadForm q;
  q.b.assign(space.dim, Rational(0));
  switch (f.op) {
    case Objective::Op::Add:
      for (const auto& g : f.args) {
        const QuadForm sub = quad_form(space, g);
        q.a2 += sub.a2;
        for (int i = 0; i < space.dim; ++i) q.b[i] += sub.b[i];
        q.c += sub.c;
      }
      return q;
    case Objective::Op::SqDist: {
      // s |y - a|^2 = s|y|^2 - 2s a.y + s|a|^2
      q.a2 = f.scale;
      Rational norm_sq = 0;
      for (int i = 0; i < space.dim; ++i) {
        q.b[i] = -2 * f.scale * f.anchor.coords[i];
        norm_sq += f.anchor.coords[i] * f.anchor.coords[i];
      }
      q.c = f.scale * norm_sq;
      return q;
    }
    case Objective::Op::Coupling: {
      // pi_p(y, phi) = r.(y - p) with r the Euclidean reduction of phi
      const auto r = reduce_euclidean(space, f.dual);
      for (int i = 0; i < space.dim; ++i) {
        q.b[i] = r[i];
        q.c -= r[i] * f.base.coords[i];
      }
      return q;
    }
    case Objective::Op::Const:
      q.c = f.value;
      return q;
  }
  throw std::logic_error("unreachable");
}

std::optional<Rational> euclidean_true_inf(const SpaceHandle& space, const Objective& f,
                                           const Point& x, const DualElement& psi) {
  QuadForm q = quad_form(space, f);
  // add <psi, y x> = r.(x - y)
  const auto r = reduce_euclidean(space, psi);
  for (int i = 0; i < space.dim; ++i) {
    q.b[i] -= r[i];
    q.c += r[i] * x.coords[i];
  }
  if (q.a2 == 0) {
    for (int i = 0; i < space.dim; ++i)
      if (q.b[i] != 0) return std::nullopt;  // affine, unbounded below
    return q.c;
  }
  Rational bb = 0;
  for (int i = 0; i < space.dim; ++i) bb += q.b[i] * q.b[i];
  return q.c - bb / (4 * q.a2);
}

const char* to_string(MfVerdict verdict) {
  switch (verdict) {
    case MfVerdict::CertifiedOut: return "certified-out";
    case MfVerdict::Consistent: return "consistent";
    case MfVerdict::ExactIn: return "exact-in";
  }
  return "?";
}

MfVerdict mf_membership(const SpaceHandle& space, const Objective& f, const Pair& pair,
                        const DualElement& y_dual, const std::vector<Point>& grid) {
  const Rational fx = eval_objective(space, f, pair.point);
  const Rational grid_value = grid_inf(space, f, pair.point, pair.dual, y_dual, grid).value;
  if (grid_value < fx) return MfVerdict::CertifiedOut;
  if (space.kind == SpaceKind::Euclidean) {
    const auto true_inf = euclidean_true_inf(space, f, pair.point, pair.dual + y_dual);
    if (!true_inf) return MfVerdict::CertifiedOut;
    return *true_inf >= fx ? MfVerdict::ExactIn : MfVerdict::CertifiedOut;
  }
  return MfVerdict::Consistent;
}

CheckReport mf_translate_check(const SpaceHandle& space, const Objective& f, const Pair& pair,
                               const DualElement& y_dual, const Point& p,
                               const std::vector<Point>& grid) {
  // f~ = f - pi_p(., y_dual)
  const Objective f_shift =
      Objective::sum({f, Objective::coupling_term(p, -y_dual)});
  const Point& x = pair.point;
  const DualElement& x_dual = pair.dual;

  const Rational lhs = grid_inf(space, f_shift, x, x_dual - y_dual, y_dual, grid).value -
                       eval_objective(space, f_shift, x);
  const Rational rhs =
      grid_inf(space, f, x, x_dual, y_dual, grid).value - eval_objective(space, f, x);

  const MfVerdict translated = mf_membership(space, f, Pair{x, x_dual - y_dual}, y_dual, grid);
  const MfVerdict origin = mf_membership(space, f, Pair{x, x_dual}, DualElement::zero(), grid);

  CheckReport r;
  r.passed = lhs == rhs && translated == origin;
  r.lhs = lhs;
  r.rhs = rhs;
  r.relation = "==";
  r.note = std::string("membership verdicts: ") + to_string(translated) + " vs " +
           to_string(origin);
  return r;
}

CheckReport monotonicity_of_mf(const SpaceHandle& space, const Objective& f,
                               const std::vector<Pair>& candidates,
                               const DualElement& y_dual, const std::vector<Point>& grid) {
  PairSet survivors(space);
  for (const auto& candidate : candidates)
    if (mf_membership(space, f, candidate, y_dual, grid) == MfVerdict::ExactIn &&
        !survivors.contains(candidate))
      survivors.add(candidate);
  auto r = is_monotone(space, survivors);
  r.note = std::to_string(survivors.size()) + " of " + std::to_string(candidates.size()) +
           " candidates certified in" + (r.note.empty() ? "" : "; " + r.note);
  return r;
}

namespace {

// --- double-precision evaluation used only inside the refinement loop ---

double dist_d(const Point& a, std::uint32_t spoke, double r) {
  if (a.spoke == spoke) return std::abs(to_double(a.radius) - r);
  if (r == 0.0) return to_double(a.radius);
  if (a.radius == 0) return r;
  return to_double(a.radius) + r;
}

double dist_sq_d(const Point& a, std::uint32_t spoke, double r) {
  const double d = dist_d(a, spoke, r);
  return d * d;
}

double qlin_spoke_d(const Point& a, const Point& b, const Point& tail, std::uint32_t spoke,
                    double r) {
  // <ab, tail z> with z the moving point [(spoke, r)]
  const Rational fixed = dist_sq(SpaceHandle::spoke_tree(), b, tail) -
                         dist_sq(SpaceHandle::spoke_tree(), a, tail);
  return (dist_sq_d(a, spoke, r) + to_double(fixed) - dist_sq_d(b, spoke, r)) / 2;
}

double eval_spoke_d(const Objective& f, std::uint32_t spoke, double r) {
  switch (f.op) {
    case Objective::Op::Add: {
      double acc = 0;
      for (const auto& g : f.args) acc += eval_spoke_d(g, spoke, r);
      return acc;
    }
    case Objective::Op::SqDist:
      return to_double(f.scale) * dist_sq_d(f.anchor, spoke, r);
    case Objective::Op::Coupling: {
      double acc = 0;
      for (const auto& term : f.dual.terms)
        acc += to_double(term.alpha * term.t) *
               qlin_spoke_d(term.tail, term.head, f.base, spoke, r);
      return acc;
    }
    case Objective::Op::Const:
      return to_double(f.value);
  }
  return 0;
}

double eval_euclid_d(const SpaceHandle& space, const Objective& f,
                     const std::vector<double>& z) {
  const QuadForm q = quad_form(space, f);  // catalog objectives are quadratic
  double acc = to_double(q.c);
  double nsq = 0;
  for (int i = 0; i < space.dim; ++i) {
    acc += to_double(q.b[i]) * z[i];
    nsq += z[i] * z[i];
  }
  return acc + to_double(q.a2) * nsq;
}

constexpr double kGoldenRatio = 0.6180339887498949;  // (sqrt(5)-1)/2

double golden_min(const std::function<double(double)>& f, double lo, double hi, double tol) {
  double a = lo, b = hi;
  double c = b - kGoldenRatio * (b - a);
  double d = a + kGoldenRatio * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGoldenRatio * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGoldenRatio * (b - a);
      fd = f(d);
    }
  }
  return (a + b) / 2;
}

Rational snap(double value) {
  // decimal snap keeps the coordinate exactly representable and well within
  // the refinement tolerance
  const double scaled = std::round(value * 1e12);
  return Rational(BigInt(static_cast<long long>(scaled)), BigInt(1000000000000LL));
}

void collect_points(const Objective& f, std::vector<Point>& out) {
  switch (f.op) {
    case Objective::Op::Add:
      for (const auto& g : f.args) collect_points(g, out);
      return;
    case Objective::Op::SqDist:
      out.push_back(f.anchor);
      return;
    case Objective::Op::Coupling:
      out.push_back(f.base);
      for (const auto& term : f.dual.terms) {
        out.push_back(term.tail);
        out.push_back(term.head);
      }
      return;
    case Objective::Op::Const:
      return;
  }
}

MinimizeResult minimize_spoke_tree(const SpaceHandle& space, const Objective& g,
                                   const std::vector<Point>& seeds, double pos_tol) {
  std::vector<Point> relevant = seeds;
  collect_points(g, relevant);
  std::set<std::uint32_t> spokes;
  std::uint32_t max_spoke = 0;
  for (const auto& pt : relevant) {
    spokes.insert(pt.spoke);
    max_spoke = std::max(max_spoke, pt.spoke);
  }
  // one spoke carrying no data point; g restricts identically to every such
  // spoke, so a single representative covers them all
  spokes.insert(max_spoke + 1);

  std::optional<Rational> best_value;
  Point best_point = Point::root();
  constexpr int kSeedGrid = 64;

  for (std::uint32_t spoke : spokes) {
    const auto fr = [&](double r) { return eval_spoke_d(g, spoke, r); };
    int best_k = 0;
    double best_f = fr(0.0);
    for (int k = 1; k <= kSeedGrid; ++k) {
      const double v = fr(static_cast<double>(k) / kSeedGrid);
      if (v < best_f) {
        best_f = v;
        best_k = k;
      }
    }
    const double lo = std::max(0.0, (best_k - 1.0) / kSeedGrid);
    const double hi = std::min(1.0, (best_k + 1.0) / kSeedGrid);
    const double refined = golden_min(fr, lo, hi, pos_tol);

    // exact re-evaluation of the closing candidates
    for (Rational radius : {snap(refined), Rational(best_k, kSeedGrid)}) {
      if (radius < 0) radius = 0;
      if (radius > 1) radius = 1;
      const Point z = Point::spoke_point(spoke, radius);
      const Rational value = eval_objective(space, g, z);
      if (!best_value || value < *best_value) {
        best_value = value;
        best_point = z;
      }
    }
  }
  return MinimizeResult{best_point, to_double(*best_value)};
}

MinimizeResult minimize_euclidean(const SpaceHandle& space, const Objective& g,
                                  const std::vector<Point>& seeds, double pos_tol) {
  if (seeds.empty()) throw ValidationError("grid_refine_minimize: empty seed list");
  // start from the best seed
  const Point* start = nullptr;
  std::optional<Rational> start_value;
  for (const auto& s : seeds) {
    const Rational v = eval_objective(space, g, s);
    if (!start_value || v < *start_value) {
      start_value = v;
      start = &s;
    }
  }
  std::vector<double> z(space.dim);
  for (int i = 0; i < space.dim; ++i) z[i] = to_double(start->coords[i]);

  constexpr int kMaxSweeps = 64;
  constexpr double kBracketCap = 1e12;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double max_move = 0;
    for (int i = 0; i < space.dim; ++i) {
      const auto fi = [&](double t) {
        std::vector<double> w = z;
        w[i] = t;
        return eval_euclid_d(space, g, w);
      };
      // expand the bracket until the interior beats both ends
      double half = 1.0;
      double lo = z[i] - half, hi = z[i] + half;
      while (true) {
        const double fl = fi(lo), fm = fi(z[i]), fh = fi(hi);
        if (fm <= fl || fm <= fh) break;
        half *= 2;
        if (half > kBracketCap)
          throw DiagnosticError(
              "objective keeps decreasing at the expanded bracket boundary; "
              "it appears unbounded below along a coordinate line");
        lo = z[i] - half;
        hi = z[i] + half;
      }
      const double t = golden_min(fi, lo, hi, pos_tol);
      max_move = std::max(max_move, std::abs(t - z[i]));
      z[i] = t;
    }
    if (max_move < pos_tol) break;
  }

  std::vector<Rational> coords(space.dim);
  for (int i = 0; i < space.dim; ++i) coords[i] = snap(z[i]);
  Point refined = Point::euclidean_point(std::move(coords));
  const Rational refined_value = eval_objective(space, g, refined);
  if (refined_value <= *start_value)
    return MinimizeResult{refined, to_double(refined_value)};
  return MinimizeResult{*start, to_double(*start_value)};
}

}  // namespace

MinimizeResult grid_refine_minimize(const SpaceHandle& space, const Objective& g,
                                    const std::vector<Point>& seeds, double position_tol) {
  validate_objective(space, g);
  for (const auto& s : seeds) validate_point(space, s);
  if (space.kind == SpaceKind::SpokeTree)
    return minimize_spoke_tree(space, g, seeds, position_tol);
  return minimize_euclidean(space, g, seeds, position_tol);
}

namespace {

CheckReport strong_convexity_certificate(const SpaceHandle& space, const Objective& h,
                                         const Point& minimizer) {
  // h(z) >= h(x*) + d(x*,z)^2/2 - 1e-8 on deterministic rational samples
  const Rational h_min = eval_objective(space, h, minimizer);
  const Rational tolerance = Rational(-1, 100000000);

  std::vector<Point> samples;
  Sampler rng(0x48414441u);  // fixed schedule
  if (space.kind == SpaceKind::SpokeTree) {
    std::vector<Point> relevant{minimizer};
    collect_points(h, relevant);
    std::set<std::uint32_t> spokes;
    std::uint32_t max_spoke = 0;
    for (const auto& pt : relevant) {
      spokes.insert(pt.spoke);
      max_spoke = std::max(max_spoke, pt.spoke);
    }
    spokes.insert(max_spoke + 1);
    const std::vector<std::uint32_t> spoke_list(spokes.begin(), spokes.end());
    while (samples.size() < 100) {
      const auto spoke = spoke_list[rng.below(spoke_list.size())];
      samples.push_back(Point::spoke_point(spoke, Rational(rng.pick(0, 97), 97)));
    }
  } else {
    while (samples.size() < 100) {
      std::vector<Rational> coords(space.dim);
      for (auto& c : coords)
        c = minimizer.coords[&c - coords.data()] + rng.signed_rational(4, 16);
      samples.push_back(Point::euclidean_point(std::move(coords)));
    }
  }

  std::optional<Rational> min_margin;
  const Point* worst = nullptr;
  for (const auto& z : samples) {
    const Rational margin =
        eval_objective(space, h, z) - h_min - dist_sq(space, minimizer, z) / 2;
    if (!min_margin || margin < *min_margin) {
      min_margin = margin;
      worst = &z;
    }
  }

  CheckReport r;
  r.passed = *min_margin >= tolerance;
  r.lhs = *min_margin;
  r.rhs = tolerance;
  r.relation = ">=";
  r.note = "minimum certificate margin over " + std::to_string(samples.size()) + " samples";
  if (!r.passed && worst)
    r.witness = nlohmann::json{{"sample", worst->describe()}}.dump();
  return r;
}

}  // namespace

ProxResult prox_step(const SpaceHandle& space, const Objective& f, const Point& y,
                     const DualElement& y_dual, const Point& p) {
  validate_objective(space, f);
  validate_point(space, y);
  validate_point(space, p);

  const Objective h = Objective::sum(
      {f, Objective::coupling_term(p, y_dual), Objective::sq_dist(y, Rational(1, 2))});

  ProxResult result;
  if (space.kind == SpaceKind::Euclidean) {
    const QuadForm q = quad_form(space, h);  // a2 >= 1/2 from the proximal term
    std::vector<Rational> coords(space.dim);
    for (int i = 0; i < space.dim; ++i) coords[i] = -q.b[i] / (2 * q.a2);
    result.minimizer = Point::euclidean_point(std::move(coords));
    result.method = ProxMethod::ClosedForm;
    result.exact_value = eval_objective(space, h, result.minimizer);
    result.value = to_double(*result.exact_value);
  } else {
    std::vector<Point> seeds{y, p};
    const auto refined = grid_refine_minimize(space, h, seeds);
    result.minimizer = refined.argmin;
    result.method = ProxMethod::GridRefine;
    result.value = refined.value;

    // strong convexity of h needs the F_l-property for y_dual; check it on a
    // sampled slice and flag the result when the check fails
    std::vector<Point> sample_points{y, p};
    collect_points(h, sample_points);
    PairSet slice(space);
    for (const auto& pt : sample_points) {
      const Pair pair{pt, y_dual};
      if (!slice.contains(pair)) slice.add(pair);
    }
    const auto fl = check_fl_property(space, slice, FlSample{default_lambdas(), p, {}});
    result.heuristic = !fl.passed;
  }

  result.certificate = strong_convexity_certificate(space, h, result.minimizer);
  return result;
}

}  // namespace hadamono
