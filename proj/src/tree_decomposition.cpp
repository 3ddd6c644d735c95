#include "tangles/tree_decomposition.hpp"

#include <algorithm>
#include <deque>

#include "tangles/errors.hpp"

namespace tangles {

std::vector<std::vector<std::size_t>> TreeDecomposition::incidence() const {
  std::vector<std::vector<std::size_t>> out(parts.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    out[edges[e].u].push_back(e);
    out[edges[e].v].push_back(e);
  }
  return out;
}

std::vector<bool> TreeDecomposition::component(std::size_t start, std::optional<std::size_t> cut) const {
  const auto inc = incidence();
  std::vector<bool> seen(parts.size(), false);
  std::deque<std::size_t> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t e : inc[x]) {
      if (cut && e == *cut) continue;
      const std::size_t y = edges[e].u == x ? edges[e].v : edges[e].u;
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  return seen;
}

TreeDecomposition nested_to_tree(const GroundSet& ground, const std::vector<Separation>& nested) {
  std::vector<Separation> m = nested;
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());
  for (const Separation& s : m) {
    if (!ground.valid(s.a) || s.b != ground.complement(s.a)) throw PreconditionError("not a bipartition of E");
    if (!std::binary_search(m.begin(), m.end(), s.inverse())) throw PreconditionError("set is not symmetric");
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!is_nested(m[i], m[j])) throw PreconditionError("set is not nested");
    }
  }

  // Sides avoiding element 0, one per bipartition.
  std::vector<Separation> chosen;
  for (const Separation& s : m) {
    if (!s.a.contains(0)) chosen.push_back(s);
  }
  std::sort(chosen.begin(), chosen.end(), [](const Separation& x, const Separation& y) { return x.a.bits < y.a.bits; });

  const std::size_t count = chosen.size();
  TreeDecomposition td;
  td.parts.assign(count + 1, Side{});
  td.parts[0] = ground.full();
  std::vector<std::size_t> parent(count + 1, 0);
  for (std::size_t i = 0; i < count; ++i) {
    const Side s = chosen[i].a;
    td.parts[i + 1] = s;
    if (s.empty()) continue;
    int best_size = static_cast<int>(ground.size()) + 1;
    for (std::size_t j = 0; j < count; ++j) {
      const Side t = chosen[j].a;
      if (j != i && s.subset_of(t) && t.size() < best_size) {
        best_size = t.size();
        parent[i + 1] = j + 1;
      }
    }
  }
  for (std::size_t i = 1; i <= count; ++i) {
    const Side sub = chosen[i - 1].a;
    td.parts[parent[i]] = Side{td.parts[parent[i]].bits & ~sub.bits};
    td.edges.push_back(TreeEdge{i, parent[i], chosen[i - 1]});
  }
  return td;
}

Separation edge_separation(const ConnectivitySystem& sys, const TreeDecomposition& td, std::size_t edge) {
  const auto side_u = td.component(td.edges.at(edge).u, edge);
  Side a;
  for (std::size_t x = 0; x < td.parts.size(); ++x) {
    if (side_u[x]) a = a | td.parts[x];
  }
  return make_separation(sys, a);
}

std::optional<std::string> structural_defect(const GroundSet& ground, const TreeDecomposition& td) {
  const std::size_t nodes = td.parts.size();
  if (nodes == 0) return "decomposition has no nodes";
  if (td.edges.size() != nodes - 1) return "edges do not form a tree (wrong edge count)";
  for (const TreeEdge& e : td.edges) {
    if (e.u >= nodes || e.v >= nodes || e.u == e.v) return "edge references an invalid node";
  }
  const auto reach = td.component(0, std::nullopt);
  if (std::find(reach.begin(), reach.end(), false) != reach.end()) return "edges do not form a tree (disconnected)";

  Side seen;
  for (Side p : td.parts) {
    if (!ground.valid(p) || !(p & seen).empty()) return "parts do not partition E";
    seen = seen | p;
  }
  if (seen != ground.full()) return "parts do not partition E";

  for (std::size_t e = 0; e < td.edges.size(); ++e) {
    const auto side_u = td.component(td.edges[e].u, e);
    Side a;
    for (std::size_t x = 0; x < nodes; ++x) {
      if (side_u[x]) a = a | td.parts[x];
    }
    if (td.edges[e].sep.a != a || td.edges[e].sep.b != ground.complement(a)) {
      return "edge " + std::to_string(e) + " separation does not match the parts";
    }
  }
  return std::nullopt;
}

NodeSet home_subtree(const ConnectivitySystem& sys, const TreeDecomposition& td, const Tangle& t) {
  std::vector<bool> alive(td.parts.size(), true);
  for (std::size_t e = 0; e < td.edges.size(); ++e) {
    const TreeEdge& edge = td.edges[e];
    if (sys.order(edge.sep.a) >= t.order) continue;
    const std::size_t small_end = t.is_small(edge.sep.a) ? edge.u : edge.v;
    const auto doomed = td.component(small_end, e);
    for (std::size_t x = 0; x < alive.size(); ++x) {
      if (doomed[x]) alive[x] = false;
    }
  }
  NodeSet out;
  for (std::size_t x = 0; x < alive.size(); ++x) {
    if (alive[x]) out.push_back(x);
  }
  return out;
}

bool lives_in(const ConnectivitySystem& sys, const TreeDecomposition& td, const Tangle& t, const NodeSet& nodes) {
  if (nodes.empty()) return false;
  std::vector<bool> in(td.parts.size(), false);
  for (std::size_t x : nodes) in.at(x) = true;

  // Connected within the induced subgraph.
  const auto inc = td.incidence();
  std::vector<bool> seen(td.parts.size(), false);
  std::vector<std::size_t> stack{nodes.front()};
  seen[nodes.front()] = true;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    ++reached;
    for (std::size_t e : inc[x]) {
      const std::size_t y = td.edges[e].u == x ? td.edges[e].v : td.edges[e].u;
      if (in[y] && !seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  const auto distinct = static_cast<std::size_t>(std::count(in.begin(), in.end(), true));
  if (reached != distinct) return false;

  for (const TreeEdge& edge : td.edges) {
    if (in[edge.u] == in[edge.v]) continue;
    if (sys.order(edge.sep.a) >= t.order) return false;
    const Side outer = in[edge.u] ? edge.sep.b : edge.sep.a;
    if (!t.is_small(outer)) return false;
  }
  return true;
}

CorollaryReport verify_corollary(const ConnectivitySystem& sys, const TreeDecomposition& td,
                                 const TangleCatalog& catalog) {
  CorollaryReport report;
  const auto maximal = catalog.maximal_indices();
  std::vector<std::vector<std::size_t>> homed_at(td.parts.size());
  for (std::size_t k = 0; k < maximal.size(); ++k) {
    const NodeSet home = home_subtree(sys, td, catalog.tangles[maximal[k]]);
    if (home.size() == 1) {
      report.home_node.push_back(home.front());
      homed_at[home.front()].push_back(maximal[k]);
    } else {
      report.home_node.push_back(std::nullopt);
      report.failures.push_back("maximal tangle #" + std::to_string(maximal[k]) + " lives in " +
                                std::to_string(home.size()) + " nodes, not a single part");
    }
  }
  for (std::size_t x = 0; x < td.parts.size(); ++x) {
    if (homed_at[x].empty()) {
      report.failures.push_back("no maximal tangle lives in the part of node " + std::to_string(x));
    } else if (homed_at[x].size() > 1) {
      report.failures.push_back(std::to_string(homed_at[x].size()) + " maximal tangles live in the part of node " +
                                std::to_string(x));
    }
  }
  return report;
}

}  // namespace tangles
