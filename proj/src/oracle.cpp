#include "tangles/oracle.hpp"

#include <algorithm>

namespace tangles::oracle {

namespace {

class Search {
 public:
  Search(Mask full, bool allow_trivial, std::vector<std::pair<Mask, Mask>> bipartitions)
      : full_(full), allow_trivial_(allow_trivial), bipartitions_(std::move(bipartitions)) {}

  std::vector<std::vector<Side>> run() {
    chosen_.clear();
    found_.clear();
    descend(0);
    return found_;
  }

 private:
  bool violates(Mask x) const {
    if (!allow_trivial_ && std::popcount(full_ & ~x) == 1) return true;
    if (x == full_) return true;
    for (std::size_t i = 0; i < chosen_.size(); ++i) {
      if ((x | chosen_[i]) == full_) return true;
      for (std::size_t j = i; j < chosen_.size(); ++j) {
        if ((x | chosen_[i] | chosen_[j]) == full_) return true;
      }
    }
    return false;
  }

  void descend(std::size_t level) {
    if (level == bipartitions_.size()) {
      std::vector<Side> sides;
      for (Mask m : chosen_) sides.push_back(Side{m});
      std::sort(sides.begin(), sides.end());
      found_.push_back(std::move(sides));
      return;
    }
    for (Mask pick : {bipartitions_[level].first, bipartitions_[level].second}) {
      if (violates(pick)) continue;
      chosen_.push_back(pick);
      descend(level + 1);
      chosen_.pop_back();
    }
  }

  Mask full_;
  bool allow_trivial_;
  std::vector<std::pair<Mask, Mask>> bipartitions_;
  std::vector<Mask> chosen_;
  std::vector<std::vector<Side>> found_;
};

}  // namespace

Result brute_force_tangles(const ConnectivitySystem& sys, bool allow_trivial, std::size_t cap) {
  const GroundSet& ground = sys.ground();
  ground.require_within(cap, "oracle");
  const Mask full = ground.full().bits;

  // Direct evaluations, bypassing the memo.
  std::vector<int> f(ground.side_count());
  int max_f = 0;
  for (Mask x = 0; x <= full; ++x) {
    f[x] = sys.evaluate(Side{x});
    max_f = std::max(max_f, f[x]);
  }

  Result result;
  for (int order = 1; order <= max_f + 1; ++order) {
    std::vector<std::pair<Mask, Mask>> bipartitions;
    for (Mask x = 0; x <= full; ++x) {
      const Mask y = full & ~x;
      if (x < y && f[x] < order) bipartitions.emplace_back(x, y);
    }
    auto tangles = Search(full, allow_trivial, std::move(bipartitions)).run();
    if (tangles.empty()) break;
    std::sort(tangles.begin(), tangles.end());
    result.by_order.push_back(std::move(tangles));
  }
  return result;
}

}  // namespace tangles::oracle
