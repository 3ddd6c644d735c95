#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace tangles {

using Mask = std::uint64_t;

/// Largest ground set representable as a bitmask side.
inline constexpr std::size_t kMaxElements = 63;

/// Default ceiling for every algorithm that loops over all 2^n sides.
inline constexpr std::size_t kDefaultCap = 16;

/// A subset of the ground set, stored as a bitmask over element indices.
struct Side {
  Mask bits = 0;

  constexpr auto operator<=>(const Side&) const = default;

  [[nodiscard]] constexpr bool empty() const { return bits == 0; }
  [[nodiscard]] constexpr bool contains(std::size_t element) const {
    return (bits >> element) & Mask{1};
  }
  [[nodiscard]] constexpr bool subset_of(Side other) const {
    return (bits & ~other.bits) == 0;
  }
  [[nodiscard]] constexpr int size() const { return std::popcount(bits); }

  friend constexpr Side operator&(Side a, Side b) { return Side{a.bits & b.bits}; }
  friend constexpr Side operator|(Side a, Side b) { return Side{a.bits | b.bits}; }

  static constexpr Side singleton(std::size_t element) { return Side{Mask{1} << element}; }
};

/// The finite ground set E: n labelled elements, indexed 0..n-1 in input order.
class GroundSet {
 public:
  GroundSet() = default;
  /// Throws InputError unless 1 <= n <= kMaxElements and labels are distinct.
  explicit GroundSet(std::vector<std::string> labels);
  /// Elements labelled "0", "1", ...
  static GroundSet indexed(std::size_t n);

  [[nodiscard]] std::size_t size() const { return labels_.size(); }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] Side full() const { return Side{full_}; }
  [[nodiscard]] Side complement(Side s) const { return Side{~s.bits & full_}; }
  [[nodiscard]] bool valid(Side s) const { return (s.bits & ~full_) == 0; }
  /// Number of distinct sides, 2^n.
  [[nodiscard]] Mask side_count() const { return full_ + 1; }

  /// Throws ResourceError when n exceeds the given cap.
  void require_within(std::size_t cap, const char* what) const;

 private:
  std::vector<std::string> labels_;
  Mask full_ = 0;
};

/// Sorted element indices of a side.
std::vector<int> elements_of(Side s);
Side side_from_elements(const std::vector<int>& elements);

}  // namespace tangles
