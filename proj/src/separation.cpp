#include "tangles/separation.hpp"

#include <algorithm>

namespace tangles {

Separation make_separation(const ConnectivitySystem& sys, Side side) {
  return Separation{side, sys.ground().complement(side), sys.order(side)};
}

bool is_nested(const Separation& s1, const Separation& s2) {
  return s1.a.subset_of(s2.a) || s1.a.subset_of(s2.b) || s1.b.subset_of(s2.a) || s1.b.subset_of(s2.b);
}

bool is_nested_with_all(const Separation& s, const std::vector<Separation>& set) {
  return std::all_of(set.begin(), set.end(), [&](const Separation& t) { return is_nested(s, t); });
}

CornerQuad corners(const ConnectivitySystem& sys, const Separation& s1, const Separation& s2) {
  return CornerQuad{
      make_separation(sys, s1.a & s2.a),
      make_separation(sys, s1.a | s2.a),
      make_separation(sys, s1.a & s2.b),
      make_separation(sys, s1.a | s2.b),
  };
}

std::vector<Separation> enumerate_separations(const ConnectivitySystem& sys, int max_order, std::size_t cap) {
  const GroundSet& ground = sys.ground();
  ground.require_within(cap, "enumerate_separations");
  std::vector<Separation> out;
  for (Mask bits = 0; bits < ground.side_count(); ++bits) {
    const int o = sys.order(Side{bits});
    if (o <= max_order) out.push_back(Separation{Side{bits}, ground.complement(Side{bits}), o});
  }
  return out;
}

std::vector<Separation> symmetric_closure(std::vector<Separation> seps) {
  const std::size_t n = seps.size();
  for (std::size_t i = 0; i < n; ++i) seps.push_back(seps[i].inverse());
  std::sort(seps.begin(), seps.end());
  seps.erase(std::unique(seps.begin(), seps.end()), seps.end());
  return seps;
}

}  // namespace tangles
