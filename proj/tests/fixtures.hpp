#pragma once

#include <bit>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tangles/connectivity.hpp"
#include "tangles/separation.hpp"

namespace fixtures {

using tangles::ConnectivitySystem;
using tangles::Side;

inline ConnectivitySystem graph(const std::vector<std::pair<std::string, std::string>>& edges) {
  tangles::EdgeList g;
  auto id = [&](const std::string& v) {
    for (std::size_t i = 0; i < g.vertex_labels.size(); ++i) {
      if (g.vertex_labels[i] == v) return static_cast<int>(i);
    }
    g.vertex_labels.push_back(v);
    return static_cast<int>(g.vertex_labels.size() - 1);
  };
  for (const auto& [u, v] : edges) g.edges.emplace_back(id(u), id(v));
  return ConnectivitySystem::from_graph(std::move(g));
}

// a = (1,2), b = (2,3)
inline ConnectivitySystem p3() { return graph({{"1", "2"}, {"2", "3"}}); }
inline ConnectivitySystem c3() { return graph({{"1", "2"}, {"2", "3"}, {"1", "3"}}); }
// Elements 12, 13, 14, 23, 24, 34; the star at vertex 1 is {0, 1, 2}.
inline ConnectivitySystem k4() {
  return graph({{"1", "2"}, {"1", "3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}, {"3", "4"}});
}
// e1 e2 e3 = elements 0..2, f1 f2 f3 = elements 3..5, sharing vertex 3.
inline ConnectivitySystem bowtie() {
  return graph({{"1", "2"}, {"2", "3"}, {"1", "3"}, {"3", "4"}, {"4", "5"}, {"3", "5"}});
}
// Triangle i occupies elements 3i..3i+2.
inline ConnectivitySystem triple_bowtie() {
  return graph({{"c", "a1"}, {"c", "b1"}, {"a1", "b1"}, {"c", "a2"}, {"c", "b2"}, {"a2", "b2"},
                {"c", "a3"}, {"c", "b3"}, {"a3", "b3"}});
}
inline ConnectivitySystem c3_gf2() {
  return ConnectivitySystem::from_matrix(tangles::PrimeFieldMatrix(2, {{1, 0, 1}, {0, 1, 1}}));
}
inline ConnectivitySystem u24_gf3() {
  return ConnectivitySystem::from_matrix(tangles::PrimeFieldMatrix(3, {{1, 0, 1, 1}, {0, 1, 1, 2}}));
}

inline constexpr Side kESide{0b000111};
inline constexpr Side kFSide{0b111000};
inline constexpr Side kT1{0b000000111};
inline constexpr Side kT2{0b000111000};
inline constexpr Side kT3{0b111000000};

struct Named {
  std::string name;
  ConnectivitySystem sys;
};

/// The fixture corpus shared by property tests and the acceptance suite.
inline std::vector<Named> corpus() {
  std::vector<Named> out;
  out.push_back({"P3", p3()});
  out.push_back({"C3", c3()});
  out.push_back({"K4", k4()});
  out.push_back({"bowtie", bowtie()});
  out.push_back({"triple bowtie", triple_bowtie()});
  out.push_back({"graphic C3 over GF(2)", c3_gf2()});
  out.push_back({"U(2,4) over GF(3)", u24_gf3()});
  return out;
}

/// Random simple-ish graph with exactly m edges on v vertices.
inline ConnectivitySystem random_graph(std::size_t m, int v, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, v - 1);
  std::vector<std::pair<std::string, std::string>> edges;
  while (edges.size() < m) {
    const int a = pick(rng);
    const int b = pick(rng);
    if (a != b) edges.emplace_back(std::to_string(a), std::to_string(b));
  }
  return graph(edges);
}

inline ConnectivitySystem random_matroid(int prime, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(0, prime - 1);
  std::vector<std::vector<int>> m(rows, std::vector<int>(cols));
  for (auto& row : m) {
    for (int& x : row) x = entry(rng);
  }
  return ConnectivitySystem::from_matrix(tangles::PrimeFieldMatrix(prime, std::move(m)));
}

/// Random symmetric nested set on n elements built by rejection sampling:
/// propose random sides (often subsets of kept sides), keep those nested
/// with everything kept so far.
inline std::vector<tangles::Separation> random_nested_set(std::size_t n, std::mt19937_64& rng) {
  const tangles::Mask full = (tangles::Mask{1} << n) - 1;
  std::vector<tangles::Separation> kept;
  std::uniform_int_distribution<int> attempts_dist(0, 3 * static_cast<int>(n));
  const int attempts = attempts_dist(rng);
  for (int i = 0; i < attempts; ++i) {
    tangles::Mask bits = rng() & full;
    if (!kept.empty() && rng() % 2 == 0) bits &= kept[rng() % kept.size()].a.bits;  // refine a kept side
    if (rng() % 10 == 0) bits = 0;  // occasionally the trivial bipartition
    const tangles::Separation s{Side{bits}, Side{full & ~bits}, 0};
    bool ok = true;
    for (const auto& t : kept) ok = ok && tangles::is_nested(s, t);
    if (ok) {
      kept.push_back(s);
      kept.push_back(s.inverse());
    }
  }
  return tangles::symmetric_closure(kept);
}

}  // namespace fixtures
