#include "hadamono/sampler.hpp"

namespace hadamono {

std::uint64_t Sampler::next() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t Sampler::below(std::uint64_t n) { return next() % n; }

long Sampler::pick(long lo, long hi) {
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

Rational Sampler::unit_rational(unsigned max_den) {
  const long den = pick(1, static_cast<long>(max_den));
  const long num = pick(0, den);
  return Rational(num, den);
}

Rational Sampler::signed_rational(long range, unsigned max_den) {
  const long den = pick(1, static_cast<long>(max_den));
  const long num = pick(-range * den, range * den);
  return Rational(num, den);
}

Point Sampler::point(const SpaceHandle& space, unsigned max_spoke) {
  if (space.kind == SpaceKind::SpokeTree) {
    const auto spoke = static_cast<std::uint32_t>(pick(0, static_cast<long>(max_spoke)));
    return Point::spoke_point(spoke, unit_rational());
  }
  std::vector<Rational> coords(space.dim);
  for (auto& c : coords) c = signed_rational();
  return Point::euclidean_point(std::move(coords));
}

DualElement Sampler::dual(const SpaceHandle& space, unsigned max_terms, unsigned max_spoke) {
  DualElement e;
  const long n = pick(0, static_cast<long>(max_terms));
  for (long i = 0; i < n; ++i) {
    DualTerm term;
    term.alpha = signed_rational(3, 4);
    term.t = signed_rational(3, 4);
    term.tail = point(space, max_spoke);
    term.head = point(space, max_spoke);
    e.terms.push_back(std::move(term));
  }
  return e;
}

}  // namespace hadamono
