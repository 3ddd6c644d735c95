#include "tangles/side.hpp"

#include <set>

#include "tangles/errors.hpp"

namespace tangles {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw InputError("ground set must have at least one element");
  if (labels_.size() > kMaxElements) {
    throw InputError("ground set has " + std::to_string(labels_.size()) +
                     " elements; at most " + std::to_string(kMaxElements) + " are supported");
  }
  std::set<std::string> seen;
  for (const auto& label : labels_) {
    if (!seen.insert(label).second) throw InputError("duplicate element label '" + label + "'");
  }
  full_ = (Mask{1} << labels_.size()) - 1;
}

GroundSet GroundSet::indexed(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return GroundSet(std::move(labels));
}

void GroundSet::require_within(std::size_t cap, const char* what) const {
  if (size() > cap) {
    throw ResourceError(std::string(what) + ": ground set has " + std::to_string(size()) +
                        " elements, above the cap of " + std::to_string(cap));
  }
}

std::vector<int> elements_of(Side s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(s.size()));
  for (Mask bits = s.bits; bits != 0; bits &= bits - 1) out.push_back(std::countr_zero(bits));
  return out;
}

Side side_from_elements(const std::vector<int>& elements) {
  Side s;
  for (int e : elements) s.bits |= Mask{1} << e;
  return s;
}

}  // namespace tangles
