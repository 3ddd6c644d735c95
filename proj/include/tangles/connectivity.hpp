#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tangles/gf_rank.hpp"
#include "tangles/side.hpp"

namespace tangles {

/// An undirected multigraph whose edges are the ground-set elements.
/// Loops and parallel edges are allowed.
struct EdgeList {
  std::vector<std::string> vertex_labels;
  std::vector<std::pair<int, int>> edges;  // vertex indices
};

/// Number of vertices incident with an edge of `side` and an edge outside it.
int graph_order(const EdgeList& graph, Side side);

/// Rank over GF(p) of the matrix columns indexed by `subset`.
int matroid_rank(const PrimeFieldMatrix& matrix, Side subset);

enum class SystemKind { graph, matroid_rank, explicit_table };

/// A ground set together with a symmetric submodular order function.
///
/// Evaluations are memoised. The cache fills idempotently, so concurrent
/// readers may call order() on a shared instance.
class ConnectivitySystem {
 public:
  static ConnectivitySystem from_graph(EdgeList graph);
  static ConnectivitySystem from_graph(GroundSet ground, EdgeList graph);
  static ConnectivitySystem from_matrix(PrimeFieldMatrix matrix);
  /// Table indexed by side bitmask; missing entries are only reported when
  /// evaluated. Throws InputError if values.size() != 2^n.
  static ConnectivitySystem from_table(std::size_t n, std::vector<std::optional<int>> values);

  ConnectivitySystem(ConnectivitySystem&&) noexcept;
  ConnectivitySystem& operator=(ConnectivitySystem&&) noexcept;
  ~ConnectivitySystem();

  [[nodiscard]] const GroundSet& ground() const { return ground_; }
  [[nodiscard]] SystemKind kind() const;

  /// o(A, B) = f(A). Memoised. Throws InputError for a missing table entry.
  [[nodiscard]] int order(Side side) const;
  /// The same value, bypassing the memo.
  [[nodiscard]] int evaluate(Side side) const;

  [[nodiscard]] const EdgeList* graph() const;
  [[nodiscard]] const PrimeFieldMatrix* matrix() const;

 private:
  struct GraphOracle {
    EdgeList graph;
    std::vector<Mask> incidence;  // per vertex: mask of incident elements
  };
  struct MatroidOracle {
    PrimeFieldMatrix matrix;
    int full_rank;
  };
  struct TableOracle {
    std::vector<std::optional<int>> values;
  };
  class Memo;

  ConnectivitySystem(GroundSet ground, std::variant<GraphOracle, MatroidOracle, TableOracle> oracle);

  GroundSet ground_;
  std::variant<GraphOracle, MatroidOracle, TableOracle> oracle_;
  std::unique_ptr<Memo> memo_;
};

/// λ(X) = r(X) + r(E∖X) − r(E). Requires a matroid-rank system.
int matroid_order(const ConnectivitySystem& sys, Side side);

struct Violation {
  enum class Kind { symmetry, submodularity };
  Kind kind;
  Side x;
  Side y;  // complement of x for symmetry violations
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::uint64_t pairs_checked = 0;
  [[nodiscard]] bool ok() const { return violations.empty(); }
};

struct Exhaustive {};
struct Sampled {
  std::uint64_t count;
  std::uint64_t seed;
};
using ValidationMode = std::variant<Exhaustive, Sampled>;

/// Checks symmetry and submodularity. Exhaustive mode visits every side and
/// every unordered pair of sides and requires n <= 16.
ValidationReport validate_system(const ConnectivitySystem& sys, ValidationMode mode);

std::string describe(const Violation& v, const GroundSet& ground);

}  // namespace tangles
