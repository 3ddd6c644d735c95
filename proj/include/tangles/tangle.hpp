#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tangles/connectivity.hpp"
#include "tangles/separation.hpp"

namespace tangles {

/// A tangle of order k+1: one small side for every separation of order <= k.
/// small_sides is sorted ascending by bitmask.
struct Tangle {
  int order = 1;
  std::vector<Side> small_sides;

  [[nodiscard]] bool is_small(Side s) const;
  /// Orients (A,B) iff o(A,B) < order.
  [[nodiscard]] bool orients(const Separation& s) const { return s.order < order; }

  auto operator<=>(const Tangle&) const = default;
};

struct TangleOptions {
  std::size_t cap = kDefaultCap;
  /// Drop the axiom that E minus one element is never small.
  bool allow_trivial = false;
};

struct TangleVerdict {
  enum class Reason {
    accepted,
    missing_separation,   // witness[0]: a side of a low-order separation with no small side chosen
    both_sides_small,     // witness[0], witness[1]
    extraneous_side,      // witness[0]: listed side whose separation has order >= the tangle's order
    covering_triple,      // witness[0..2]
    singleton_complement  // witness[0] = E∖{e}
  };
  Reason reason = Reason::accepted;
  std::array<Side, 3> witness{};

  [[nodiscard]] bool accepted() const { return reason == Reason::accepted; }
};

/// Checks the tangle axioms for the given small sides at the given order.
TangleVerdict is_tangle(const ConnectivitySystem& sys, int order, const std::vector<Side>& small_sides,
                        const TangleOptions& options = {});

/// All tangles of exactly this order, canonically sorted.
std::vector<Tangle> enumerate_tangles(const ConnectivitySystem& sys, int order, const TangleOptions& options = {});

/// Every tangle of every order. Tangles are sorted by (order, small sides);
/// maximal[i] flags tangles[i].
struct TangleCatalog {
  std::vector<Tangle> tangles;
  std::vector<bool> maximal;

  [[nodiscard]] int max_order() const { return tangles.empty() ? 0 : tangles.back().order; }
  [[nodiscard]] std::size_t count_of_order(int order) const;
  [[nodiscard]] std::vector<std::size_t> maximal_indices() const;
};

/// Enumerates orders 1, 2, ... until an order has no tangle.
TangleCatalog all_tangles(const ConnectivitySystem& sys, const TangleOptions& options = {});

bool includes(const Tangle& low, const Tangle& high);

bool distinguishes(const Separation& s, const Tangle& t1, const Tangle& t2);

/// Least order of a separation distinguishing the two; nullopt iff one includes the other.
std::optional<int> min_distinguishing_order(const ConnectivitySystem& sys, const Tangle& t1, const Tangle& t2);

/// True iff s distinguishes t1 and t2 with the least possible order.
bool distinguishes_efficiently(const ConnectivitySystem& sys, const Separation& s, const Tangle& t1,
                               const Tangle& t2);

/// All oriented separations that efficiently distinguish some pair of catalog
/// tangles (of any orders). Canonically sorted and closed under inverse.
std::vector<Separation> efficient_pool(const ConnectivitySystem& sys, const TangleCatalog& catalog);

/// Some catalog pair (i < j) that s distinguishes efficiently, if any.
std::optional<std::pair<std::size_t, std::size_t>> efficient_witness(const ConnectivitySystem& sys,
                                                                     const TangleCatalog& catalog,
                                                                     const Separation& s);

std::string to_string(TangleVerdict::Reason reason);

}  // namespace tangles
