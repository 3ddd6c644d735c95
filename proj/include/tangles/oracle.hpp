#pragma once

#include <cstddef>
#include <vector>

#include "tangles/connectivity.hpp"

namespace tangles::oracle {

inline constexpr std::size_t kOracleCap = 8;

/// Tangles straight from the axioms, used to cross-check the engine.
///
/// Every order is searched from scratch over the bipartitions of order below
/// it, in bitmask order. A partial choice is abandoned as soon as the chosen
/// small sides break an axiom; nothing else is inferred. by_order[k-1] holds
/// the sorted small-side lists of all tangles of order k.
struct Result {
  std::vector<std::vector<std::vector<Side>>> by_order;
};

/// Throws ResourceError above `cap` elements.
Result brute_force_tangles(const ConnectivitySystem& sys, bool allow_trivial = false, std::size_t cap = kOracleCap);

}  // namespace tangles::oracle
