#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tangles/separation.hpp"
#include "tangles/tangle.hpp"

namespace tangles {

/// Tree edge u–v with the separation (S(X_u), S(X_v)) it induces, where X_u
/// is the component of T − uv containing u.
struct TreeEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  Separation sep;
};

/// A tree with one (possibly empty) part per node; the parts partition E.
struct TreeDecomposition {
  std::vector<Side> parts;
  std::vector<TreeEdge> edges;

  [[nodiscard]] std::size_t node_count() const { return parts.size(); }
  /// Edge indices incident with each node.
  [[nodiscard]] std::vector<std::vector<std::size_t>> incidence() const;
  /// Nodes reachable from `start` without crossing edge `cut`, as a mask over nodes.
  [[nodiscard]] std::vector<bool> component(std::size_t start, std::optional<std::size_t> cut) const;
};

using NodeSet = std::vector<std::size_t>;

/// Tree-decomposition whose edge separations, with inverses, are exactly M.
/// Each bipartition is oriented away from element 0; the chosen sides form a
/// laminar family and the tree is its containment forest under a root for E.
/// Throws PreconditionError if M is not symmetric and pairwise nested.
TreeDecomposition nested_to_tree(const GroundSet& ground, const std::vector<Separation>& nested);

/// (S(X_u), S(X_v)) recomputed from the parts. Order is taken from the system.
Separation edge_separation(const ConnectivitySystem& sys, const TreeDecomposition& td, std::size_t edge);

/// Describes the first structural defect (not a tree, parts not a partition,
/// stored edge separation inconsistent with the parts), if any.
std::optional<std::string> structural_defect(const GroundSet& ground, const TreeDecomposition& td);

/// The smallest subtree in which the tangle lives: every edge of order below
/// the tangle's order removes the component on its small side.
NodeSet home_subtree(const ConnectivitySystem& sys, const TreeDecomposition& td, const Tangle& t);

/// Nonempty, connected, and every edge leaving it is oriented by t towards it.
bool lives_in(const ConnectivitySystem& sys, const TreeDecomposition& td, const Tangle& t, const NodeSet& nodes);

struct CorollaryReport {
  std::vector<std::string> failures;
  /// home_node[k] is the node of the k-th maximal tangle, when its home is a single node.
  std::vector<std::optional<std::size_t>> home_node;
  [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// Checks that every part is the home of exactly one maximal tangle and every
/// maximal tangle lives in a single part.
CorollaryReport verify_corollary(const ConnectivitySystem& sys, const TreeDecomposition& td,
                                 const TangleCatalog& catalog);

}  // namespace tangles
