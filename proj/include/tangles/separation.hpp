#pragma once

#include <compare>
#include <vector>

#include "tangles/connectivity.hpp"
#include "tangles/side.hpp"

namespace tangles {

/// An oriented separation (A, B): B is the complement of A, with o(A, B) cached.
struct Separation {
  Side a;
  Side b;
  int order = 0;

  [[nodiscard]] Separation inverse() const { return Separation{b, a, order}; }

  bool operator==(const Separation& o) const { return a == o.a && b == o.b; }
  /// Canonical order: ascending (order, A-bitmask).
  std::strong_ordering operator<=>(const Separation& o) const {
    if (auto c = order <=> o.order; c != 0) return c;
    return a.bits <=> o.a.bits;
  }
};

/// Builds (side, complement) with its order from the system.
Separation make_separation(const ConnectivitySystem& sys, Side side);

/// True iff some side of one is contained in some side of the other.
bool is_nested(const Separation& s1, const Separation& s2);

/// Nested with every member of `set`.
bool is_nested_with_all(const Separation& s, const std::vector<Separation>& set);

/// The four corner separations of (A,B) and (C,D).
struct CornerQuad {
  Separation a_cap_c;  // (A∩C, B∪D)
  Separation a_cup_c;  // (A∪C, B∩D)
  Separation a_cap_d;  // (A∩D, B∪C)
  Separation a_cup_d;  // (A∪D, B∩C)
};

CornerQuad corners(const ConnectivitySystem& sys, const Separation& s1, const Separation& s2);

/// Every oriented separation of order <= max_order, ascending by A-bitmask.
/// Both orientations are listed. Throws ResourceError above `cap` elements.
std::vector<Separation> enumerate_separations(const ConnectivitySystem& sys, int max_order,
                                              std::size_t cap = kDefaultCap);

/// Smallest superset closed under inverse, canonically sorted and deduplicated.
std::vector<Separation> symmetric_closure(std::vector<Separation> seps);

/// Unordered bipartition key: the side with the smaller bitmask.
[[nodiscard]] inline Side representative(const Separation& s) { return s.a.bits < s.b.bits ? s.a : s.b; }

}  // namespace tangles
