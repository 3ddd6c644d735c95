#include "tangles/construct.hpp"

#include <algorithm>
#include <random>

#include "tangles/errors.hpp"

namespace tangles {

namespace {

void insert_pair(const ConnectivitySystem& sys, const TangleCatalog& catalog, NestedSet& set, const Separation& s) {
  for (const Separation& x : {s, s.inverse()}) {
    auto it = std::lower_bound(set.seps.begin(), set.seps.end(), x);
    if (it != set.seps.end() && *it == x) continue;
    const auto pos = it - set.seps.begin();
    set.seps.insert(it, x);
    const auto witness = efficient_witness(sys, catalog, x);
    if (!witness) throw PreconditionError("separation does not distinguish any two tangles efficiently");
    set.provenance.insert(set.provenance.begin() + pos, *witness);
  }
}

std::vector<Separation> addable_members(const std::vector<Separation>& pool, const NestedSet& set) {
  std::vector<Separation> out;
  for (const Separation& s : pool) {
    if (!set.contains(s) && is_nested_with_all(s, set.seps)) out.push_back(s);
  }
  return out;
}

std::string pair_name(const TangleCatalog& catalog, std::size_t i, std::size_t j) {
  return "tangles #" + std::to_string(i) + " (order " + std::to_string(catalog.tangles[i].order) + ") and #" +
         std::to_string(j) + " (order " + std::to_string(catalog.tangles[j].order) + ")";
}

}  // namespace

bool NestedSet::contains(const Separation& s) const { return std::binary_search(seps.begin(), seps.end(), s); }

NestedSet make_nested_set(const ConnectivitySystem& sys, const TangleCatalog& catalog,
                          const std::vector<Separation>& seps) {
  NestedSet set;
  for (const Separation& s : seps) {
    if (!is_nested_with_all(s, set.seps)) throw PreconditionError("seed separations are not pairwise nested");
    insert_pair(sys, catalog, set, s);
  }
  return set;
}

NestedSet greedy_extend(const ConnectivitySystem& sys, const TangleCatalog& catalog, const NestedSet& seed,
                        TieBreak tie_break, const GreedyObserver& observer) {
  NestedSet set = make_nested_set(sys, catalog, seed.seps);
  const auto pool = efficient_pool(sys, catalog);
  std::optional<std::mt19937_64> rng;
  if (const auto* r = std::get_if<RandomTieBreak>(&tie_break)) rng.emplace(r->seed);

  while (true) {
    const auto addable = addable_members(pool, set);
    if (observer) observer(set.seps, addable);
    if (addable.empty()) break;
    std::size_t pick = 0;
    if (rng) pick = std::uniform_int_distribution<std::size_t>(0, addable.size() - 1)(*rng);
    insert_pair(sys, catalog, set, addable[pick]);
  }
  return set;
}

NestedSet stratified_construct(const ConnectivitySystem& sys, const TangleCatalog& catalog) {
  NestedSet set;
  const auto pool = efficient_pool(sys, catalog);
  std::vector<int> orders;
  for (const Separation& s : pool) {
    if (orders.empty() || orders.back() != s.order) orders.push_back(s.order);
  }
  for (int k : orders) {
    while (true) {
      auto next = std::find_if(pool.begin(), pool.end(), [&](const Separation& s) {
        return s.order == k && !set.contains(s) && is_nested_with_all(s, set.seps);
      });
      if (next == pool.end()) break;
      insert_pair(sys, catalog, set, *next);
    }
  }
  return set;
}

bool DistinguishReport::ok() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const PairCheck& p) { return p.efficient; });
}

std::optional<PairCheck> DistinguishReport::first_failure() const {
  for (const PairCheck& p : pairs) {
    if (!p.efficient) return p;
  }
  return std::nullopt;
}

DistinguishReport verify_distinguishing(const ConnectivitySystem& sys, const TangleCatalog& catalog,
                                        const std::vector<Separation>& seps) {
  DistinguishReport report;
  const auto maximal = catalog.maximal_indices();
  for (std::size_t x = 0; x < maximal.size(); ++x) {
    for (std::size_t y = x + 1; y < maximal.size(); ++y) {
      const Tangle& p = catalog.tangles[maximal[x]];
      const Tangle& q = catalog.tangles[maximal[y]];
      PairCheck check{maximal[x], maximal[y], -1, false, false};
      const auto d = min_distinguishing_order(sys, p, q);
      check.min_order = d.value_or(-1);
      for (const Separation& s : seps) {
        if (!distinguishes(s, p, q)) continue;
        check.distinguished = true;
        if (d && s.order == *d) check.efficient = true;
      }
      report.pairs.push_back(check);
    }
  }
  return report;
}

NestedSet prune_minimal(const ConnectivitySystem& sys, const TangleCatalog& catalog, const NestedSet& input) {
  NestedSet nested = input;
  if (nested.seps != symmetric_closure(nested.seps)) {
    nested.seps = symmetric_closure(nested.seps);
    nested.provenance.clear();
  }
  if (auto failure = verify_distinguishing(sys, catalog, nested.seps).first_failure()) {
    throw PreconditionError("nested set does not efficiently distinguish maximal " +
                            pair_name(catalog, failure->first, failure->second));
  }
  // One pass suffices: a bipartition that cannot be removed stays needed
  // once others are gone.
  std::vector<Separation> keys;
  for (const Separation& s : nested.seps) {
    if (s.a == representative(s)) keys.push_back(s);
  }
  std::sort(keys.begin(), keys.end());

  NestedSet current = nested;
  if (current.provenance.size() != current.seps.size()) current.provenance.clear();
  for (const Separation& key : keys) {
    NestedSet candidate;
    for (std::size_t i = 0; i < current.seps.size(); ++i) {
      if (current.seps[i] == key || current.seps[i] == key.inverse()) continue;
      candidate.seps.push_back(current.seps[i]);
      if (i < current.provenance.size()) candidate.provenance.push_back(current.provenance[i]);
    }
    if (verify_distinguishing(sys, catalog, candidate.seps).ok()) current = std::move(candidate);
  }
  return current;
}

}  // namespace tangles
