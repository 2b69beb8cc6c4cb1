#pragma once

#include <cstddef>
#include <vector>

#include "hadamono/dual.hpp"

namespace hadamono {

/// An element (x, x_dual) of X x X_dual.
struct Pair {
  Point point;
  DualElement dual;

  bool operator==(const Pair&) const = default;
};

/// Finite ordered collection of pairs in one space. Iteration order is the
/// insertion order; structural duplicates are rejected.
class PairSet {
 public:
  explicit PairSet(SpaceHandle space) : space_(space) {}
  PairSet(SpaceHandle space, std::vector<Pair> pairs);

  void add(Pair pair);
  bool contains(const Pair& pair) const;

  const SpaceHandle& space() const { return space_; }
  const std::vector<Pair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  /// Order-insensitive structural set equality.
  bool same_elements(const PairSet& other) const;
  bool is_subset_of(const PairSet& other) const;

 private:
  SpaceHandle space_;
  std::vector<Pair> pairs_;
};

/// A PairSet designated as the finite universe for relative polar
/// computations. Operations taking a GroundSet validate that the set they
/// are applied to is contained in it.
class GroundSet {
 public:
  explicit GroundSet(PairSet set) : set_(std::move(set)) {}
  const PairSet& set() const { return set_; }

 private:
  PairSet set_;
};

/// <x_dual - y_dual, yx> for p1 = (x, x_dual), p2 = (y, y_dual). The relation
/// value; nonnegative iff the pairs are monotonically related.
Rational mu_value(const SpaceHandle& space, const Pair& p1, const Pair& p2);

bool mu_related(const SpaceHandle& space, const Pair& p1, const Pair& p2);

/// True iff p is related to every element of M (vacuously true for empty M).
bool mu_related_to_set(const SpaceHandle& space, const Pair& p, const PairSet& M);

/// Pass iff every unordered pair of elements is related; the witness is the
/// first violating pair in iteration order.
CheckReport is_monotone(const SpaceHandle& space, const PairSet& M);

/// {p in G : p related to all of M}, in G's order. Requires M subset of G.
PairSet polar(const SpaceHandle& space, const PairSet& M, const GroundSet& G);

/// polar(polar(M, G), G).
PairSet mu_closure(const SpaceHandle& space, const PairSet& M, const GroundSet& G);

/// For monotone M within G: true iff polar(M, G) == M as sets.
bool is_maximal_in(const SpaceHandle& space, const PairSet& M, const GroundSet& G);

/// Greedy scan of G in the given order (a permutation of indices into G;
/// empty means insertion order), adding every pair related to the current
/// set. The result contains M, is monotone, and is maximal within G.
PairSet extend_maximal(const SpaceHandle& space, const PairSet& M, const GroundSet& G,
                       const std::vector<std::size_t>& order = {});

/// All maximal monotone subsets of G containing M, by exhaustive search with
/// monotonicity pruning. Throws LimitError when G is larger than the limit.
std::vector<PairSet> enumerate_maximal_extensions(const SpaceHandle& space, const PairSet& M,
                                                  const GroundSet& G,
                                                  std::size_t limit = 14);

/// The duals attached to point u in M (the slice of M at u).
std::vector<DualElement> slice_duals(const SpaceHandle& space, const PairSet& M,
                                     const Point& u);

/// Convexity certificate for the slice at u: every formal combination
/// (1-lambda) u_dual + lambda v_dual of slice duals must stay related to M.
CheckReport check_slice_convex(const SpaceHandle& space, const PairSet& M, const Point& u,
                               const std::vector<Rational>& lambdas);

}  // namespace hadamono
