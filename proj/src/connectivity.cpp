#include "tangles/connectivity.hpp"

#include <atomic>
#include <climits>
#include <cstdio>
#include <mutex>
#include <random>
#include <unordered_map>

#include "tangles/errors.hpp"

namespace tangles {

namespace {

// Dense memo up to 2^22 sides, hash map above.
constexpr std::size_t kDenseMemoLimit = 22;
constexpr int kUnset = INT_MIN;

std::string hex_mask(Mask bits) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(bits));
  return buf;
}

}  // namespace

class ConnectivitySystem::Memo {
 public:
  explicit Memo(std::size_t n) {
    if (n <= kDenseMemoLimit) {
      dense_ = std::make_unique<std::atomic<int>[]>(std::size_t{1} << n);
      for (std::size_t i = 0; i < (std::size_t{1} << n); ++i) dense_[i].store(kUnset, std::memory_order_relaxed);
    }
  }

  std::optional<int> find(Mask key) const {
    if (dense_) {
      const int v = dense_[key].load(std::memory_order_relaxed);
      return v == kUnset ? std::nullopt : std::optional<int>(v);
    }
    std::lock_guard lock(mutex_);
    auto it = sparse_.find(key);
    return it == sparse_.end() ? std::nullopt : std::optional<int>(it->second);
  }

  void store(Mask key, int value) {
    if (dense_) {
      dense_[key].store(value, std::memory_order_relaxed);
      return;
    }
    std::lock_guard lock(mutex_);
    sparse_.emplace(key, value);
  }

 private:
  std::unique_ptr<std::atomic<int>[]> dense_;
  mutable std::mutex mutex_;
  std::unordered_map<Mask, int> sparse_;
};

int graph_order(const EdgeList& graph, Side side) {
  std::vector<char> in_side(graph.vertex_labels.size(), 0);
  std::vector<char> in_rest(graph.vertex_labels.size(), 0);
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    auto& mark = side.contains(e) ? in_side : in_rest;
    mark[static_cast<std::size_t>(graph.edges[e].first)] = 1;
    mark[static_cast<std::size_t>(graph.edges[e].second)] = 1;
  }
  int count = 0;
  for (std::size_t v = 0; v < in_side.size(); ++v) count += (in_side[v] && in_rest[v]) ? 1 : 0;
  return count;
}

int matroid_rank(const PrimeFieldMatrix& matrix, Side subset) { return matrix.column_rank(subset); }

ConnectivitySystem::ConnectivitySystem(GroundSet ground,
                                       std::variant<GraphOracle, MatroidOracle, TableOracle> oracle)
    : ground_(std::move(ground)),
      oracle_(std::move(oracle)),
      memo_(std::make_unique<Memo>(ground_.size())) {}

ConnectivitySystem::ConnectivitySystem(ConnectivitySystem&&) noexcept = default;
ConnectivitySystem& ConnectivitySystem::operator=(ConnectivitySystem&&) noexcept = default;
ConnectivitySystem::~ConnectivitySystem() = default;

ConnectivitySystem ConnectivitySystem::from_graph(EdgeList graph) {
  std::vector<std::string> labels;
  labels.reserve(graph.edges.size());
  for (const auto& [u, v] : graph.edges) {
    labels.push_back(graph.vertex_labels.at(static_cast<std::size_t>(u)) + "-" +
                     graph.vertex_labels.at(static_cast<std::size_t>(v)));
  }
  // Parallel edges share endpoints; disambiguate by element index.
  std::unordered_map<std::string, int> seen;
  for (const auto& l : labels) ++seen[l];
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (seen[labels[i]] > 1) labels[i] += "#" + std::to_string(i);
  }
  return from_graph(GroundSet(std::move(labels)), std::move(graph));
}

ConnectivitySystem ConnectivitySystem::from_graph(GroundSet ground, EdgeList graph) {
  if (ground.size() != graph.edges.size()) {
    throw InputError("graph has " + std::to_string(graph.edges.size()) + " edges but the ground set has " +
                     std::to_string(ground.size()) + " elements");
  }
  GraphOracle oracle{std::move(graph), {}};
  oracle.incidence.assign(oracle.graph.vertex_labels.size(), 0);
  for (std::size_t e = 0; e < oracle.graph.edges.size(); ++e) {
    const auto [u, v] = oracle.graph.edges[e];
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= oracle.incidence.size() ||
        static_cast<std::size_t>(v) >= oracle.incidence.size()) {
      throw InputError("edge " + std::to_string(e) + " references an unknown vertex");
    }
    oracle.incidence[static_cast<std::size_t>(u)] |= Mask{1} << e;
    oracle.incidence[static_cast<std::size_t>(v)] |= Mask{1} << e;
  }
  return ConnectivitySystem(std::move(ground), std::move(oracle));
}

ConnectivitySystem ConnectivitySystem::from_matrix(PrimeFieldMatrix matrix) {
  GroundSet ground = GroundSet::indexed(matrix.cols());
  const int full_rank = matrix.column_rank(ground.full());
  return ConnectivitySystem(std::move(ground), MatroidOracle{std::move(matrix), full_rank});
}

ConnectivitySystem ConnectivitySystem::from_table(std::size_t n, std::vector<std::optional<int>> values) {
  GroundSet ground = GroundSet::indexed(n);
  if (n > kDenseMemoLimit || values.size() != ground.side_count()) {
    throw InputError("a table over " + std::to_string(n) + " elements needs exactly 2^" +
                     std::to_string(n) + " entries");
  }
  return ConnectivitySystem(std::move(ground), TableOracle{std::move(values)});
}

SystemKind ConnectivitySystem::kind() const {
  switch (oracle_.index()) {
    case 0: return SystemKind::graph;
    case 1: return SystemKind::matroid_rank;
    default: return SystemKind::explicit_table;
  }
}

const EdgeList* ConnectivitySystem::graph() const {
  const auto* g = std::get_if<GraphOracle>(&oracle_);
  return g ? &g->graph : nullptr;
}

const PrimeFieldMatrix* ConnectivitySystem::matrix() const {
  const auto* m = std::get_if<MatroidOracle>(&oracle_);
  return m ? &m->matrix : nullptr;
}

int ConnectivitySystem::evaluate(Side side) const {
  if (!ground_.valid(side)) throw PreconditionError("side is not a subset of the ground set");
  if (const auto* g = std::get_if<GraphOracle>(&oracle_)) {
    const Mask rest = ground_.complement(side).bits;
    int count = 0;
    for (Mask inc : g->incidence) count += ((inc & side.bits) != 0 && (inc & rest) != 0) ? 1 : 0;
    return count;
  }
  if (const auto* m = std::get_if<MatroidOracle>(&oracle_)) {
    return m->matrix.column_rank(side) + m->matrix.column_rank(ground_.complement(side)) - m->full_rank;
  }
  const auto& t = std::get<TableOracle>(oracle_);
  const auto& v = t.values[side.bits];
  if (!v) throw InputError("order table has no entry for side " + hex_mask(side.bits));
  return *v;
}

int ConnectivitySystem::order(Side side) const {
  if (!ground_.valid(side)) throw PreconditionError("side is not a subset of the ground set");
  if (auto hit = memo_->find(side.bits)) return *hit;
  const int value = evaluate(side);
  memo_->store(side.bits, value);
  return value;
}

int matroid_order(const ConnectivitySystem& sys, Side side) {
  if (sys.kind() != SystemKind::matroid_rank) throw PreconditionError("matroid_order needs a matroid system");
  return sys.evaluate(side);
}

ValidationReport validate_system(const ConnectivitySystem& sys, ValidationMode mode) {
  const GroundSet& ground = sys.ground();
  ValidationReport report;
  auto check_symmetry = [&](Side x) {
    const Side cx = ground.complement(x);
    if (sys.order(x) != sys.order(cx)) report.violations.push_back({Violation::Kind::symmetry, x, cx});
  };
  auto check_pair = [&](Side x, Side y) {
    ++report.pairs_checked;
    if (sys.order(x) + sys.order(y) < sys.order(x & y) + sys.order(x | y)) {
      report.violations.push_back({Violation::Kind::submodularity, x, y});
    }
  };

  if (std::holds_alternative<Exhaustive>(mode)) {
    ground.require_within(16, "exhaustive validation");
    const Mask count = ground.side_count();
    std::vector<int> f(count);
    for (Mask x = 0; x < count; ++x) f[x] = sys.order(Side{x});
    for (Mask x = 0; x < count; ++x) {
      if (x < (~x & ground.full().bits)) check_symmetry(Side{x});
    }
    // Comparable pairs satisfy the inequality with equality, but are counted.
    for (Mask x = 0; x < count; ++x) {
      for (Mask y = x + 1; y < count; ++y) {
        ++report.pairs_checked;
        if (f[x] + f[y] < f[x & y] + f[x | y]) {
          report.violations.push_back({Violation::Kind::submodularity, Side{x}, Side{y}});
        }
      }
    }
    return report;
  }

  const auto& sampled = std::get<Sampled>(mode);
  std::mt19937_64 rng(sampled.seed);
  const Mask full = ground.full().bits;
  for (std::uint64_t i = 0; i < sampled.count; ++i) {
    const Side x{rng() & full};
    const Side y{rng() & full};
    check_symmetry(x);
    check_pair(x, y);
  }
  return report;
}

std::string describe(const Violation& v, const GroundSet& ground) {
  auto fmt = [&](Side s) {
    std::string out = "{";
    bool first = true;
    for (int e : elements_of(s)) {
      if (!first) out += ",";
      out += ground.labels()[static_cast<std::size_t>(e)];
      first = false;
    }
    return out + "}";
  };
  if (v.kind == Violation::Kind::symmetry) return "symmetry: f" + fmt(v.x) + " != f" + fmt(v.y);
  return "submodularity: f" + fmt(v.x) + " + f" + fmt(v.y) + " < f(X∩Y) + f(X∪Y)";
}

}  // namespace tangles
