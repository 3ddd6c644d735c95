#include "tangles/tangle.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "tangles/errors.hpp"

namespace tangles {

namespace {

struct Bipartition {
  Side first;   // smaller bitmask
  Side second;
};

// Bipartitions whose order lies in [lo, hi], ascending by the smaller side.
std::vector<Bipartition> bipartitions_in(const ConnectivitySystem& sys, int lo, int hi) {
  const GroundSet& ground = sys.ground();
  std::vector<Bipartition> out;
  for (Mask bits = 0; bits < ground.side_count(); ++bits) {
    const Side a{bits};
    const Side b = ground.complement(a);
    if (b.bits < a.bits) continue;
    const int o = sys.order(a);
    if (o >= lo && o <= hi) out.push_back({a, b});
  }
  return out;
}

// Depth-first orientation of one stratum of bipartitions on top of a fixed
// set of small sides. A side may be chosen small only if it neither is a
// forbidden cofinite singleton nor completes a cover of E together with at
// most two existing small sides. That test also enforces that subsets of
// small sides are small.
class StratumSearch {
 public:
  StratumSearch(const GroundSet& ground, bool allow_trivial) : ground_(ground), allow_trivial_(allow_trivial) {}

  std::vector<std::vector<Side>> run(const std::vector<Side>& base, const std::vector<Bipartition>& levels) {
    small_.clear();
    unions_.clear();
    for (Side s : base) push(s);

    std::vector<std::vector<Side>> found;
    struct Frame {
      int next_choice = 0;
      std::size_t small_size = 0;
      std::size_t unions_size = 0;
    };
    std::vector<Frame> stack(levels.size() + 1);
    std::size_t depth = 0;
    stack[0] = {0, small_.size(), unions_.size()};

    while (true) {
      if (depth == levels.size()) {
        std::vector<Side> sides = small_;
        std::sort(sides.begin(), sides.end());
        found.push_back(std::move(sides));
        if (depth == 0) break;
        --depth;
        continue;
      }
      Frame& frame = stack[depth];
      small_.resize(frame.small_size);
      unions_.resize(frame.unions_size);
      if (frame.next_choice == 2) {
        if (depth == 0) break;
        --depth;
        continue;
      }
      const Side candidate = frame.next_choice == 0 ? levels[depth].first : levels[depth].second;
      ++frame.next_choice;
      if (!admissible(candidate)) continue;
      push(candidate);
      ++depth;
      stack[depth] = {0, small_.size(), unions_.size()};
    }
    return found;
  }

 private:
  bool admissible(Side candidate) const {
    const Side rest = ground_.complement(candidate);
    if (rest.empty()) return false;
    if (!allow_trivial_ && rest.size() == 1) return false;
    return std::none_of(unions_.begin(), unions_.end(), [&](Mask u) { return (rest.bits & ~u) == 0; });
  }

  void push(Side s) {
    for (Side t : small_) unions_.push_back(s.bits | t.bits);
    unions_.push_back(s.bits);
    small_.push_back(s);
  }

  const GroundSet& ground_;
  bool allow_trivial_;
  std::vector<Side> small_;
  std::vector<Mask> unions_;  // every union of one or two small sides
};

int max_order_value(const ConnectivitySystem& sys) {
  int best = sys.order(Side{});
  for (Mask bits = 0; bits < sys.ground().side_count(); ++bits) best = std::max(best, sys.order(Side{bits}));
  return best;
}

std::vector<Tangle> extend_all(const ConnectivitySystem& sys, const std::vector<Tangle>& lower, int order,
                               const TangleOptions& options) {
  StratumSearch search(sys.ground(), options.allow_trivial);
  std::vector<Tangle> out;
  if (order == 1) {
    for (auto& sides : search.run({}, bipartitions_in(sys, std::numeric_limits<int>::min(), 0))) {
      out.push_back(Tangle{1, std::move(sides)});
    }
  } else {
    const auto stratum = bipartitions_in(sys, order - 1, order - 1);
    for (const Tangle& t : lower) {
      for (auto& sides : search.run(t.small_sides, stratum)) out.push_back(Tangle{order, std::move(sides)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool Tangle::is_small(Side s) const { return std::binary_search(small_sides.begin(), small_sides.end(), s); }

TangleVerdict is_tangle(const ConnectivitySystem& sys, int order, const std::vector<Side>& small_sides,
                        const TangleOptions& options) {
  if (order < 1) throw PreconditionError("tangle order must be at least 1");
  const GroundSet& ground = sys.ground();
  const std::set<Side> small(small_sides.begin(), small_sides.end());
  TangleVerdict verdict;
  auto reject = [&](TangleVerdict::Reason r, Side a, Side b = {}, Side c = {}) {
    verdict.reason = r;
    verdict.witness = {a, b, c};
    return verdict;
  };

  for (Side s : small) {
    if (!ground.valid(s) || sys.order(s) >= order) return reject(TangleVerdict::Reason::extraneous_side, s);
  }
  for (Mask bits = 0; bits < ground.side_count(); ++bits) {
    const Side a{bits};
    const Side b = ground.complement(a);
    if (b.bits < a.bits || sys.order(a) >= order) continue;
    const bool has_a = small.contains(a);
    const bool has_b = small.contains(b);
    if (!has_a && !has_b) return reject(TangleVerdict::Reason::missing_separation, a);
    if (has_a && has_b) return reject(TangleVerdict::Reason::both_sides_small, a, b);
  }
  const std::vector<Side> list(small.begin(), small.end());
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = i; j < list.size(); ++j) {
      const Side pair = list[i] | list[j];
      const Side need = ground.complement(pair);
      for (std::size_t k = j; k < list.size(); ++k) {
        if (need.subset_of(list[k])) return reject(TangleVerdict::Reason::covering_triple, list[i], list[j], list[k]);
      }
    }
  }
  if (!options.allow_trivial) {
    for (Side s : list) {
      if (ground.complement(s).size() == 1) return reject(TangleVerdict::Reason::singleton_complement, s);
    }
  }
  return verdict;
}

std::vector<Tangle> enumerate_tangles(const ConnectivitySystem& sys, int order, const TangleOptions& options) {
  if (order < 1) throw PreconditionError("tangle order must be at least 1");
  sys.ground().require_within(options.cap, "enumerate_tangles");
  std::vector<Tangle> current = extend_all(sys, {}, 1, options);
  for (int k = 2; k <= order && !current.empty(); ++k) current = extend_all(sys, current, k, options);
  return current;
}

std::size_t TangleCatalog::count_of_order(int order) const {
  return static_cast<std::size_t>(
      std::count_if(tangles.begin(), tangles.end(), [&](const Tangle& t) { return t.order == order; }));
}

std::vector<std::size_t> TangleCatalog::maximal_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < tangles.size(); ++i) {
    if (maximal[i]) out.push_back(i);
  }
  return out;
}

TangleCatalog all_tangles(const ConnectivitySystem& sys, const TangleOptions& options) {
  sys.ground().require_within(options.cap, "all_tangles");
  // Beyond max f + 1 every separation is already oriented, so higher orders
  // can only repeat the same small sides.
  const int last_order = std::max(1, max_order_value(sys) + 1);

  std::vector<std::vector<Tangle>> by_order;
  by_order.push_back(extend_all(sys, {}, 1, options));
  while (!by_order.back().empty() && static_cast<int>(by_order.size()) < last_order) {
    by_order.push_back(extend_all(sys, by_order.back(), static_cast<int>(by_order.size()) + 1, options));
  }

  TangleCatalog catalog;
  for (std::size_t k = 0; k < by_order.size(); ++k) {
    for (const Tangle& t : by_order[k]) {
      bool extended = false;
      if (k + 1 < by_order.size()) {
        extended = std::any_of(by_order[k + 1].begin(), by_order[k + 1].end(),
                               [&](const Tangle& h) { return includes(t, h); });
      }
      catalog.tangles.push_back(t);
      catalog.maximal.push_back(!extended);
    }
  }
  return catalog;
}

bool includes(const Tangle& low, const Tangle& high) {
  return low.order <= high.order &&
         std::includes(high.small_sides.begin(), high.small_sides.end(), low.small_sides.begin(),
                       low.small_sides.end());
}

bool distinguishes(const Separation& s, const Tangle& t1, const Tangle& t2) {
  if (!t1.orients(s) || !t2.orients(s)) return false;
  return t1.is_small(s.a) != t2.is_small(s.a);
}

std::optional<int> min_distinguishing_order(const ConnectivitySystem& sys, const Tangle& t1, const Tangle& t2) {
  const int bound = std::min(t1.order, t2.order);
  std::optional<int> best;
  for (Side s : t1.small_sides) {
    const int o = sys.order(s);
    if (o >= bound || t2.is_small(s)) continue;
    if (!best || o < *best) best = o;
  }
  return best;
}

bool distinguishes_efficiently(const ConnectivitySystem& sys, const Separation& s, const Tangle& t1,
                               const Tangle& t2) {
  if (!distinguishes(s, t1, t2)) return false;
  return min_distinguishing_order(sys, t1, t2) == s.order;
}

std::vector<Separation> efficient_pool(const ConnectivitySystem& sys, const TangleCatalog& catalog) {
  const GroundSet& ground = sys.ground();
  std::vector<Separation> pool;
  const auto& ts = catalog.tangles;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      const auto d = min_distinguishing_order(sys, ts[i], ts[j]);
      if (!d) continue;
      for (Side s : ts[i].small_sides) {
        if (sys.order(s) == *d && !ts[j].is_small(s)) pool.push_back(Separation{s, ground.complement(s), *d});
      }
    }
  }
  return symmetric_closure(std::move(pool));
}

std::optional<std::pair<std::size_t, std::size_t>> efficient_witness(const ConnectivitySystem& sys,
                                                                     const TangleCatalog& catalog,
                                                                     const Separation& s) {
  const auto& ts = catalog.tangles;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (!ts[i].orients(s)) continue;
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      if (distinguishes_efficiently(sys, s, ts[i], ts[j])) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

std::string to_string(TangleVerdict::Reason reason) {
  switch (reason) {
    case TangleVerdict::Reason::accepted: return "accepted";
    case TangleVerdict::Reason::missing_separation: return "separation without a small side";
    case TangleVerdict::Reason::both_sides_small: return "both sides small";
    case TangleVerdict::Reason::extraneous_side: return "small side of a separation of too high order";
    case TangleVerdict::Reason::covering_triple: return "three small sides cover the ground set";
    case TangleVerdict::Reason::singleton_complement: return "complement of a single element is small";
  }
  return "unknown";
}

}  // namespace tangles
