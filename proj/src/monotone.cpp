#include "hadamono/monotone.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>
#include <thread>

#include "hadamono/errors.hpp"

namespace hadamono {

PairSet::PairSet(SpaceHandle space, std::vector<Pair> pairs) : space_(space) {
  for (auto& p : pairs) add(std::move(p));
}

void PairSet::add(Pair pair) {
  validate_point(space_, pair.point);
  for (const auto& term : pair.dual.terms) {
    validate_point(space_, term.tail);
    validate_point(space_, term.head);
  }
  if (contains(pair)) throw ValidationError("duplicate pair in pair set");
  pairs_.push_back(std::move(pair));
}

bool PairSet::contains(const Pair& pair) const {
  return std::find(pairs_.begin(), pairs_.end(), pair) != pairs_.end();
}

bool PairSet::same_elements(const PairSet& other) const {
  return is_subset_of(other) && other.is_subset_of(*this);
}

bool PairSet::is_subset_of(const PairSet& other) const {
  return std::all_of(pairs_.begin(), pairs_.end(),
                     [&](const Pair& p) { return other.contains(p); });
}

Rational mu_value(const SpaceHandle& space, const Pair& p1, const Pair& p2) {
  const BoundVector yx{p2.point, p1.point};
  return evaluate(space, p1.dual, yx) - evaluate(space, p2.dual, yx);
}

bool mu_related(const SpaceHandle& space, const Pair& p1, const Pair& p2) {
  return mu_value(space, p1, p2) >= 0;
}

bool mu_related_to_set(const SpaceHandle& space, const Pair& p, const PairSet& M) {
  return std::all_of(M.pairs().begin(), M.pairs().end(),
                     [&](const Pair& m) { return mu_related(space, p, m); });
}

CheckReport is_monotone(const SpaceHandle& space, const PairSet& M) {
  if (space != M.space()) throw ValidationError("pair set belongs to a different space");
  const auto& pairs = M.pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const Rational value = mu_value(space, pairs[i], pairs[j]);
      if (value < 0) {
        auto r = CheckReport::fail(value, 0, ">=");
        r.witness = nlohmann::json{{"first", i}, {"second", j}}.dump();
        return r;
      }
    }
  auto r = CheckReport::pass(0, 0, ">=");
  if (pairs.size() < 2) r.note = "vacuous";
  return r;
}

namespace {

void check_ground(const SpaceHandle& space, const PairSet& M, const GroundSet& G) {
  if (space != M.space() || space != G.set().space())
    throw ValidationError("pair set / ground set space mismatch");
  if (!M.is_subset_of(G.set()))
    throw ValidationError("ground set does not contain the pair set");
}

unsigned thread_budget() {
  if (const char* env = std::getenv("HADAMONO_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<unsigned>(n);
  }
  return 1;
}

}  // namespace

PairSet polar(const SpaceHandle& space, const PairSet& M, const GroundSet& G) {
  check_ground(space, M, G);
  const auto& candidates = G.set().pairs();
  std::vector<char> keep(candidates.size(), 0);

  const unsigned threads = thread_budget();
  if (threads > 1 && candidates.size() > 16) {
    std::vector<std::thread> workers;
    const std::size_t chunk = (candidates.size() + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      const std::size_t lo = w * chunk;
      const std::size_t hi = std::min(candidates.size(), lo + chunk);
      if (lo >= hi) break;
      workers.emplace_back([&, lo, hi] {
        for (std::size_t i = lo; i < hi; ++i)
          keep[i] = mu_related_to_set(space, candidates[i], M) ? 1 : 0;
      });
    }
    for (auto& t : workers) t.join();
  } else {
    for (std::size_t i = 0; i < candidates.size(); ++i)
      keep[i] = mu_related_to_set(space, candidates[i], M) ? 1 : 0;
  }

  PairSet out(space);
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (keep[i]) out.add(candidates[i]);
  return out;
}

PairSet mu_closure(const SpaceHandle& space, const PairSet& M, const GroundSet& G) {
  return polar(space, polar(space, M, G), G);
}

bool is_maximal_in(const SpaceHandle& space, const PairSet& M, const GroundSet& G) {
  if (!is_monotone(space, M).passed)
    throw ContractError("is_maximal_in requires a monotone set");
  return polar(space, M, G).same_elements(M);
}

PairSet extend_maximal(const SpaceHandle& space, const PairSet& M, const GroundSet& G,
                       const std::vector<std::size_t>& order) {
  check_ground(space, M, G);
  if (!is_monotone(space, M).passed)
    throw ContractError("extend_maximal requires a monotone seed set");
  const auto& candidates = G.set().pairs();

  std::vector<std::size_t> scan = order;
  if (scan.empty()) {
    scan.resize(candidates.size());
    for (std::size_t i = 0; i < scan.size(); ++i) scan[i] = i;
  } else {
    std::vector<char> seen(candidates.size(), 0);
    for (std::size_t idx : scan) {
      if (idx >= candidates.size() || seen[idx])
        throw ValidationError("extend_maximal: order is not a permutation of the ground set");
      seen[idx] = 1;
    }
    if (scan.size() != candidates.size())
      throw ValidationError("extend_maximal: order is not a permutation of the ground set");
  }

  PairSet current = M;
  for (std::size_t idx : scan) {
    const Pair& candidate = candidates[idx];
    if (current.contains(candidate)) continue;
    if (mu_related_to_set(space, candidate, current)) current.add(candidate);
  }
  return current;
}

namespace {

// Maximal monotone subsets of G are exactly the maximal cliques of the
// relatedness graph (the relation is reflexive and symmetric), so the
// enumeration is Bron-Kerbosch over bitmasks seeded with M.
using Mask = std::uint64_t;

struct CliqueEnum {
  std::size_t n = 0;
  std::vector<Mask> adj;  // neighbors, diagonal excluded
  std::vector<Mask> found;

  void run(Mask r, Mask p, Mask x) {
    if (p == 0 && x == 0) {
      found.push_back(r);
      return;
    }
    // pivot on the candidate dominating the most of p
    Mask pivot_pool = p | x;
    std::size_t pivot = 0;
    int best = -1;
    for (std::size_t i = 0; i < n; ++i)
      if (pivot_pool >> i & 1) {
        const int deg = std::popcount(p & adj[i]);
        if (deg > best) {
          best = deg;
          pivot = i;
        }
      }
    Mask branch = p & ~adj[pivot];
    for (std::size_t i = 0; i < n; ++i)
      if (branch >> i & 1) {
        const Mask v = Mask(1) << i;
        run(r | v, p & adj[i], x & adj[i]);
        p &= ~v;
        x |= v;
      }
  }
};

}  // namespace

std::vector<PairSet> enumerate_maximal_extensions(const SpaceHandle& space, const PairSet& M,
                                                  const GroundSet& G, std::size_t limit) {
  check_ground(space, M, G);
  if (G.set().size() > std::min<std::size_t>(limit, 64))
    throw LimitError("ground set of size " + std::to_string(G.set().size()) +
                     " exceeds the enumeration limit " + std::to_string(limit));
  if (!is_monotone(space, M).passed)
    throw ContractError("enumerate_maximal_extensions requires a monotone seed set");

  const auto& candidates = G.set().pairs();
  const std::size_t n = candidates.size();

  CliqueEnum ce;
  ce.n = n;
  ce.adj.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (mu_related(space, candidates[i], candidates[j])) {
        ce.adj[i] |= Mask(1) << j;
        ce.adj[j] |= Mask(1) << i;
      }

  Mask seed = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (M.contains(candidates[i])) seed |= Mask(1) << i;

  Mask allowed = n == 0 ? 0 : (n >= 64 ? ~Mask(0) : (Mask(1) << n) - 1);
  for (std::size_t i = 0; i < n; ++i)
    if (seed >> i & 1) allowed &= ce.adj[i];
  ce.run(seed, allowed & ~seed, 0);

  std::sort(ce.found.begin(), ce.found.end());
  std::vector<PairSet> out;
  out.reserve(ce.found.size());
  for (Mask m : ce.found) {
    PairSet s(space);
    for (std::size_t i = 0; i < n; ++i)
      if (m >> i & 1) s.add(candidates[i]);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<DualElement> slice_duals(const SpaceHandle& space, const PairSet& M,
                                     const Point& u) {
  validate_point(space, u);
  std::vector<DualElement> out;
  for (const auto& p : M.pairs())
    if (p.point == u) out.push_back(p.dual);
  return out;
}

CheckReport check_slice_convex(const SpaceHandle& space, const PairSet& M, const Point& u,
                               const std::vector<Rational>& lambdas) {
  const auto duals = slice_duals(space, M, u);
  for (std::size_t i = 0; i < duals.size(); ++i)
    for (std::size_t j = 0; j < duals.size(); ++j)
      for (const auto& lambda : lambdas) {
        const DualElement combo = (1 - lambda) * duals[i] + lambda * duals[j];
        const Pair candidate{u, combo};
        for (const auto& m : M.pairs()) {
          const Rational value = mu_value(space, candidate, m);
          if (value < 0) {
            auto r = CheckReport::fail(value, 0, ">=");
            r.witness = nlohmann::json{{"first_dual", i},
                                       {"second_dual", j},
                                       {"lambda", format_rational(lambda)}}
                            .dump();
            return r;
          }
        }
      }
  auto r = CheckReport::pass(0, 0, ">=");
  if (duals.size() < 2) r.note = "vacuous";
  return r;
}

}  // namespace hadamono
