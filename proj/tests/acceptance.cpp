// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "tangles/cli.hpp"
#include "tangles/construct.hpp"
#include "tangles/tree_decomposition.hpp"

using namespace tangles;
namespace fs = std::filesystem;

namespace {

const fs::path kData = TANGLES_DATA_DIR;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

TangleOptions wide() {
  TangleOptions o;
  o.cap = 16;
  return o;
}

struct CorpusFile {
  std::string name;
  std::string file;
};

const std::vector<CorpusFile> kCorpusFiles{
    {"P3", "p3.graph"},           {"C3", "c3.graph"},
    {"K4", "k4.graph"},           {"bowtie", "bowtie.graph"},
    {"triple bowtie", "triple_bowtie.graph"}, {"graphic C3", "c3_gf2.matroid"},
    {"U(2,4)", "u24_gf3.matroid"},
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 1. cmd_oracle agrees with the engine on every corpus file within 60 s.
Outcome oracle_equivalence() {
  Outcome o;
  for (const auto& [name, file] : kCorpusFiles) {
    cli::RunConfig c;
    c.input = (kData / file).string();
    c.cap = 9;  // the triple bowtie has nine elements
    std::ostringstream out;
    std::ostringstream err;
    const auto start = std::chrono::steady_clock::now();
    const int code = cli::cmd_oracle(c, out, err);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (code != 0) o.fail(name + ": oracle reported a mismatch (exit " + std::to_string(code) + ")");
    if (seconds >= 60.0) o.fail(name + ": took " + std::to_string(seconds) + " s");
  }
  if (o.pass) o.detail = "7 instances match";
  return o;
}

// 2. Number and order of maximal tangles.
Outcome catalog_counts() {
  Outcome o;
  const std::vector<std::tuple<std::string, ConnectivitySystem, std::size_t, int>> expected = [] {
    std::vector<std::tuple<std::string, ConnectivitySystem, std::size_t, int>> v;
    v.emplace_back("P3", fixtures::p3(), 1, 1);
    v.emplace_back("C3", fixtures::c3(), 1, 2);
    v.emplace_back("K4", fixtures::k4(), 1, 3);
    v.emplace_back("bowtie", fixtures::bowtie(), 2, 2);
    v.emplace_back("triple bowtie", fixtures::triple_bowtie(), 3, 2);
    return v;
  }();
  for (const auto& [name, sys, count, order] : expected) {
    const auto catalog = all_tangles(sys, wide());
    const auto maximal = catalog.maximal_indices();
    if (maximal.size() != count) {
      o.fail(name + ": " + std::to_string(maximal.size()) + " maximal tangles, expected " + std::to_string(count));
    }
    for (auto i : maximal) {
      if (catalog.tangles[i].order != order) o.fail(name + ": maximal tangle of order " + std::to_string(catalog.tangles[i].order));
    }
  }
  if (o.pass) o.detail = "P3 1@1, C3 1@2, K4 1@3, bowtie 2@2, triple bowtie 3@2";
  return o;
}

// 3 and 4 share the same runs.
std::pair<Outcome, Outcome> greedy_robustness() {
  Outcome result;
  Outcome step;
  int runs = 0;
  int rounds_checked = 0;
  std::vector<std::pair<std::string, ConnectivitySystem>> instances;
  instances.emplace_back("bowtie", fixtures::bowtie());
  instances.emplace_back("triple bowtie", fixtures::triple_bowtie());
  for (const auto& [name, sys] : instances) {
    const auto catalog = all_tangles(sys, wide());
    const auto maximal = catalog.maximal_indices();
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      auto observer = [&](const std::vector<Separation>& current, const std::vector<Separation>& addable) {
        for (std::size_t x = 0; x < maximal.size(); ++x) {
          for (std::size_t y = x + 1; y < maximal.size(); ++y) {
            const Tangle& p = catalog.tangles[maximal[x]];
            const Tangle& q = catalog.tangles[maximal[y]];
            const bool covered = std::any_of(current.begin(), current.end(), [&](const Separation& s) {
              return distinguishes_efficiently(sys, s, p, q);
            });
            if (covered) continue;
            ++rounds_checked;
            const bool extendable = std::any_of(addable.begin(), addable.end(), [&](const Separation& s) {
              return distinguishes_efficiently(sys, s, p, q);
            });
            if (!extendable) step.fail(name + " seed " + std::to_string(seed) + ": no addable separation for a pair");
          }
        }
      };
      const auto n = greedy_extend(sys, catalog, {}, RandomTieBreak{seed}, observer);
      ++runs;
      if (!verify_distinguishing(sys, catalog, n.seps).ok()) result.fail(name + " seed " + std::to_string(seed));
    }
  }
  if (result.pass) result.detail = std::to_string(runs) + " randomised runs, 0 failures";
  if (step.pass) step.detail = std::to_string(rounds_checked) + " undistinguished-pair rounds, all extendable";
  return {result, step};
}

// 5. Stratified construction on the corpus.
Outcome stratified() {
  Outcome o;
  for (const auto& [name, sys] : fixtures::corpus()) {
    const auto catalog = all_tangles(sys, wide());
    if (!verify_distinguishing(sys, catalog, stratified_construct(sys, catalog).seps).ok()) o.fail(name);
  }
  if (o.pass) o.detail = "7 instances";
  return o;
}

// 6. nested_to_tree round trip.
Outcome roundtrip() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  int nontrivial = 0;
  for (std::size_t n = 3; n <= 10; ++n) {
    const GroundSet g = GroundSet::indexed(n);
    for (int i = 0; i < 100; ++i) {
      const auto m = fixtures::random_nested_set(n, rng);
      nontrivial += m.size() > 2 ? 1 : 0;
      const auto td = nested_to_tree(g, m);
      if (auto defect = structural_defect(g, td)) {
        o.fail("n=" + std::to_string(n) + ": " + *defect);
        continue;
      }
      std::vector<Separation> edges;
      for (const auto& e : td.edges) {
        edges.push_back(e.sep);
        edges.push_back(e.sep.inverse());
      }
      if (symmetric_closure(edges) != m || edges.size() != m.size()) {
        o.fail("n=" + std::to_string(n) + ": edge separations differ from the input");
      }
    }
  }
  if (o.pass) o.detail = "800 sets (" + std::to_string(nontrivial) + " with >1 bipartition)";
  return o;
}

// 7. Symmetry and submodularity.
Outcome order_axioms() {
  Outcome o;
  std::uint64_t exhaustive_pairs = 0;
  for (const auto& [name, sys] : fixtures::corpus()) {
    if (sys.ground().size() > 8) continue;
    const auto r = validate_system(sys, Exhaustive{});
    exhaustive_pairs += r.pairs_checked;
    if (!r.ok()) o.fail(name + ": " + describe(r.violations.front(), sys.ground()));
  }
  std::vector<std::pair<std::string, ConnectivitySystem>> large;
  for (auto& [name, sys] : fixtures::corpus()) large.emplace_back(name, std::move(sys));
  std::mt19937_64 rng(16);
  large.emplace_back("random graph n=16", fixtures::random_graph(16, 9, rng));
  large.emplace_back("random graph n=12", fixtures::random_graph(12, 6, rng));
  large.emplace_back("random GF(5) matroid n=16", fixtures::random_matroid(5, 4, 16, rng));
  large.emplace_back("random GF(2) matroid n=14", fixtures::random_matroid(2, 5, 14, rng));
  for (const auto& [name, sys] : large) {
    const auto r = validate_system(sys, Sampled{1000, 7});
    if (!r.ok()) o.fail(name + ": " + describe(r.violations.front(), sys.ground()));
  }
  if (o.pass) {
    o.detail = std::to_string(exhaustive_pairs) + " exhaustive pairs, " + std::to_string(large.size()) +
               " x 1000 sampled pairs, 0 violations";
  }
  return o;
}

// 8. Corner lemma on all bowtie triples.
Outcome corner_lemma() {
  Outcome o;
  const auto sys = fixtures::bowtie();
  const auto seps = enumerate_separations(sys, 1 << 20);
  std::uint64_t hypotheses = 0;
  for (const auto& s1 : seps) {
    for (const auto& s2 : seps) {
      if (is_nested(s1, s2)) continue;
      const auto corner = corners(sys, s1, s2).a_cap_c;
      for (const auto& s3 : seps) {
        if (!is_nested(s3, s1) || !is_nested(s3, s2)) continue;
        ++hypotheses;
        if (!is_nested(corner, s3)) o.fail("violating triple found");
      }
    }
  }
  if (o.pass) o.detail = std::to_string(hypotheses) + " triples satisfy the hypothesis, 0 violations";
  return o;
}

// 9. Parts and maximal tangles correspond after pruning; the unpruned
// triple-bowtie star does not.
Outcome corollary() {
  Outcome o;
  std::vector<std::pair<std::string, ConnectivitySystem>> instances;
  instances.emplace_back("bowtie", fixtures::bowtie());
  instances.emplace_back("triple bowtie", fixtures::triple_bowtie());
  instances.emplace_back("K4", fixtures::k4());
  for (const auto& [name, sys] : instances) {
    const auto catalog = all_tangles(sys, wide());
    const auto pruned = prune_minimal(sys, catalog, greedy_extend(sys, catalog, {}));
    const auto td = nested_to_tree(sys.ground(), pruned.seps);
    const auto report = verify_corollary(sys, td, catalog);
    if (!report.ok()) o.fail(name + ": " + report.failures.front());
    if (td.node_count() != catalog.maximal_indices().size()) o.fail(name + ": node count differs from maximal tangles");
  }
  const auto tb = fixtures::triple_bowtie();
  const auto catalog = all_tangles(tb, wide());
  const auto star = nested_to_tree(tb.ground(), greedy_extend(tb, catalog, {}).seps);
  const auto negative = verify_corollary(tb, star, catalog);
  const auto centre = static_cast<std::size_t>(std::find(star.parts.begin(), star.parts.end(), Side{}) - star.parts.begin());
  if (negative.ok() || centre == star.parts.size() ||
      negative.failures != std::vector<std::string>{"no maximal tangle lives in the part of node " + std::to_string(centre)}) {
    o.fail("negative control did not fail at the empty centre part");
  }
  if (o.pass) o.detail = "3 pruned pipelines pass; unpruned star fails at its empty centre";
  return o;
}

// 10. Pruned sets are minimal.
Outcome minimality() {
  Outcome o;
  int removals = 0;
  for (const auto& [name, sys] : fixtures::corpus()) {
    const auto catalog = all_tangles(sys, wide());
    for (const auto& start : {greedy_extend(sys, catalog, {}), stratified_construct(sys, catalog)}) {
      const auto pruned = prune_minimal(sys, catalog, start);
      if (!verify_distinguishing(sys, catalog, pruned.seps).ok()) o.fail(name + ": pruned set lost the property");
      for (const auto& s : pruned.seps) {
        if (s.a != representative(s)) continue;
        std::vector<Separation> fewer;
        for (const auto& t : pruned.seps) {
          if (t != s && t != s.inverse()) fewer.push_back(t);
        }
        ++removals;
        if (verify_distinguishing(sys, catalog, fewer).ok()) o.fail(name + ": a bipartition is redundant");
      }
    }
  }
  if (o.pass) o.detail = std::to_string(removals) + " single removals, each breaks the property";
  return o;
}

// 11. Byte-identical JSON across runs.
Outcome determinism() {
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / "tangles_acceptance";
  fs::create_directories(dir);
  for (const auto& [name, file] : kCorpusFiles) {
    for (int variant = 0; variant < 3; ++variant) {
      std::string outputs[2];
      for (int i = 0; i < 2; ++i) {
        cli::RunConfig c;
        c.input = (kData / file).string();
        c.prune = variant != 1;
        if (variant == 1) c.strategy = cli::Strategy::stratified;
        if (variant == 2) c.seed = 99;
        c.out_td = (dir / ("td" + std::to_string(i) + ".json")).string();
        c.out_tangles = (dir / ("tangles" + std::to_string(i) + ".json")).string();
        std::ostringstream out;
        std::ostringstream err;
        if (cli::cmd_decompose(c, out, err) != 0) o.fail(name + ": decompose failed");
        outputs[i] = slurp(c.out_td) + slurp(c.out_tangles);
      }
      if (outputs[0] != outputs[1]) o.fail(name + ": outputs differ");
    }
  }
  if (o.pass) o.detail = "21 configurations, identical bytes";
  return o;
}

}  // namespace

int main() {
  const auto [robust, step] = greedy_robustness();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1  oracle equivalence", oracle_equivalence},
      {"AC2  catalog counts", catalog_counts},
      {"AC3  greedy robustness under random tie-breaks", [&] { return robust; }},
      {"AC4  greedy step always extendable", [&] { return step; }},
      {"AC5  stratified construction", stratified},
      {"AC6  nested set -> tree round trip", roundtrip},
      {"AC7  symmetry and submodularity", order_axioms},
      {"AC8  corner lemma", corner_lemma},
      {"AC9  parts correspond to maximal tangles", corollary},
      {"AC10 pruned sets are minimal", minimality},
      {"AC11 deterministic output", determinism},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    const Outcome o = check();
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << ": " << o.detail << '\n';
  }
  std::cout << (failures == 0 ? "all acceptance criteria pass" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
