#ifndef ROOKCHAR_QUASICYCLE_HPP_
#define ROOKCHAR_QUASICYCLE_HPP_

#include <cstdint>
#include <vector>

#include "rookchar/rook_core.hpp"

namespace rookchar {

// Unit of the canonical decomposition: either a pure cycle (length >= 2) or
// a chain a1 -> a2 -> ... -> am with am killed (length >= 1; a lone kill is
// the chain of length one).
struct Quasicycle {
  enum class Kind { PureCycle, Chain };

  Kind kind;
  std::vector<int> points;

  bool operator==(const Quasicycle&) const = default;
};

// Canonical decomposition into independent quasicycles: supports are pairwise
// disjoint and partition support(r); the product of the factors (any order)
// equals r.  Pure cycles are rotated least-point-first; factors are sorted by
// least support element.
std::vector<Quasicycle> decompose(const RookElement& r);

RookElement to_element(const Quasicycle& q);

// Alternative valid quasicycle factorizations of the same element, obtained
// by merging random groups of chains into single cycle-with-kills factors.
// Deterministic under the seed.
std::vector<RookElement> random_regrouping(const std::vector<Quasicycle>& qs,
                                           std::uint64_t seed);

}  // namespace rookchar

#endif  // ROOKCHAR_QUASICYCLE_HPP_
