#pragma once

#include <optional>
#include <vector>

#include "hadamono/monotone.hpp"

namespace hadamono {

/// Convex objective from the closed catalog: scaled squared-distance
/// anchors, coupling terms pi_base(., dual), constants, and sums thereof.
/// Exactly evaluable at any point. Convex on Euclidean space by
/// construction; on the spoke tree coupling terms need not be convex.
struct Objective {
  enum class Op { Add, SqDist, Coupling, Const };

  Op op = Op::Const;
  std::vector<Objective> args;  // Add
  Point anchor;                 // SqDist
  Rational scale = 1;           // SqDist, > 0
  Point base;                   // Coupling
  DualElement dual;             // Coupling
  Rational value = 0;           // Const

  static Objective sq_dist(Point anchor, Rational scale = 1);
  static Objective coupling_term(Point base, DualElement dual);
  static Objective constant(Rational value);
  static Objective sum(std::vector<Objective> terms);

  /// True if any coupling term occurs in the tree.
  bool has_coupling() const;
};

/// Throws ValidationError on malformed trees (nonpositive sq_dist scale,
/// points not in the space).
void validate_objective(const SpaceHandle& space, const Objective& f);

Rational eval_objective(const SpaceHandle& space, const Objective& f, const Point& z);

/// Grid relaxation of I_f(x, xd, yd) = inf_y { f(y) + pi_y(x, xd + yd) }:
/// the minimum over the supplied grid, an over-estimate of the true
/// infimum, together with the first attaining grid point.
struct GridInf {
  Rational value;
  Point argmin;
};
GridInf grid_inf(const SpaceHandle& space, const Objective& f, const Point& x,
                 const DualElement& x_dual, const DualElement& y_dual,
                 const std::vector<Point>& grid);

/// Quadratic normal form a2 * |y|^2 + b . y + c of a catalog objective on
/// Euclidean space (every catalog tree is degree <= 2 there).
struct QuadForm {
  Rational a2 = 0;
  std::vector<Rational> b;
  Rational c = 0;
};
QuadForm quad_form(const SpaceHandle& space, const Objective& f);

/// Exact infimum of f + <psi, . x> over all of Euclidean space; nullopt
/// means unbounded below.
std::optional<Rational> euclidean_true_inf(const SpaceHandle& space, const Objective& f,
                                           const Point& x, const DualElement& psi);

/// Three-valued membership of (x, xd) in M^f_{yd}, tested through the grid
/// relaxation: CertifiedOut is sound (the true infimum can only be lower);
/// ExactIn is available on Euclidean space where the infimum has a closed
/// form; Consistent means the grid gave no refutation.
enum class MfVerdict { CertifiedOut, Consistent, ExactIn };
const char* to_string(MfVerdict verdict);

MfVerdict mf_membership(const SpaceHandle& space, const Objective& f, const Pair& pair,
                        const DualElement& y_dual, const std::vector<Point>& grid);

/// Verifies, exactly and per the supplied grid, that translating f by the
/// coupling with y_dual shifts the membership functional by a constant:
///   I_{f~}(x, xd - yd, yd) - f~(x) == I_f(x, xd, yd) - f(x),
/// and that the two membership verdicts coincide.
CheckReport mf_translate_check(const SpaceHandle& space, const Objective& f, const Pair& pair,
                               const DualElement& y_dual, const Point& p,
                               const std::vector<Point>& grid);

/// Filters candidates down to those certified inside M^f_{yd} and asserts
/// monotonicity of the surviving set.
CheckReport monotonicity_of_mf(const SpaceHandle& space, const Objective& f,
                               const std::vector<Pair>& candidates,
                               const DualElement& y_dual, const std::vector<Point>& grid);

enum class ProxMethod { ClosedForm, GridRefine };

/// Result of one proximal step: the minimizer of
///   h(z) = f(z) + pi_p(z, y_dual) + d(z,y)^2 / 2,
/// its value, and the strong-convexity certificate
///   h(z) >= h(x*) + d(x*,z)^2 / 2 - 1e-8 evaluated on >= 100 samples.
struct ProxResult {
  Point minimizer;
  double value = 0;
  std::optional<Rational> exact_value;  // closed-form path only
  CheckReport certificate;
  ProxMethod method = ProxMethod::GridRefine;
  /// Set on the spoke tree when the sampled F_l check for y_dual fails, in
  /// which case strong convexity of h is not guaranteed.
  bool heuristic = false;
};

ProxResult prox_step(const SpaceHandle& space, const Objective& f, const Point& y,
                     const DualElement& y_dual, const Point& p);

/// Derivative-free engine behind the grid path of prox_step: grid seeding
/// plus golden-section refinement per segment (per spoke on the tree, per
/// coordinate line on Euclidean space). Throws DiagnosticError when the
/// value keeps decreasing at every expanded bracket boundary.
struct MinimizeResult {
  Point argmin;
  double value = 0;
};
MinimizeResult grid_refine_minimize(const SpaceHandle& space, const Objective& g,
                                    const std::vector<Point>& seeds,
                                    double position_tol = 1e-10);

}  // namespace hadamono
