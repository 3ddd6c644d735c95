#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tangles/separation.hpp"
#include "tangles/tangle.hpp"

namespace tangles {

/// A symmetric, pairwise nested set of separations in which each member
/// efficiently distinguishes some pair of catalog tangles.
struct NestedSet {
  std::vector<Separation> seps;  // canonically sorted
  /// provenance[i]: catalog indices of a tangle pair seps[i] distinguishes efficiently.
  std::vector<std::pair<std::size_t, std::size_t>> provenance;

  [[nodiscard]] bool contains(const Separation& s) const;
  [[nodiscard]] std::size_t bipartition_count() const { return seps.size() / 2; }
};

struct CanonicalTieBreak {};
struct RandomTieBreak {
  std::uint64_t seed;
};
using TieBreak = std::variant<CanonicalTieBreak, RandomTieBreak>;

/// Called once per round with the current set and the addable pool members.
using GreedyObserver =
    std::function<void(const std::vector<Separation>& current, const std::vector<Separation>& addable)>;

/// Builds a NestedSet from arbitrary separations: closes under inverse and
/// checks nestedness and efficiency. Throws PreconditionError otherwise.
NestedSet make_nested_set(const ConnectivitySystem& sys, const TangleCatalog& catalog,
                          const std::vector<Separation>& seps);

/// Adds efficient pool separations nested with everything so far until none
/// is addable. Each round adds one bipartition (both orientations).
NestedSet greedy_extend(const ConnectivitySystem& sys, const TangleCatalog& catalog, const NestedSet& seed,
                        TieBreak tie_break = CanonicalTieBreak{}, const GreedyObserver& observer = {});

/// Processes pool orders in ascending order; within order k adds the first
/// addable separation of order exactly k until none is left.
NestedSet stratified_construct(const ConnectivitySystem& sys, const TangleCatalog& catalog);

struct PairCheck {
  std::size_t first;   // catalog indices
  std::size_t second;
  int min_order;
  bool distinguished;  // by some member of the set
  bool efficient;      // by a member of order min_order
};

struct DistinguishReport {
  std::vector<PairCheck> pairs;  // every unordered pair of maximal tangles
  [[nodiscard]] bool ok() const;
  [[nodiscard]] std::optional<PairCheck> first_failure() const;
};

DistinguishReport verify_distinguishing(const ConnectivitySystem& sys, const TangleCatalog& catalog,
                                        const std::vector<Separation>& seps);

/// Removes bipartitions in canonical order while every pair of maximal
/// tangles stays efficiently distinguished. Throws PreconditionError if the
/// input does not have that property to begin with.
NestedSet prune_minimal(const ConnectivitySystem& sys, const TangleCatalog& catalog, const NestedSet& nested);

}  // namespace tangles
