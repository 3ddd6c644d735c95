#include "tangles/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>

#include "tangles/construct.hpp"
#include "tangles/errors.hpp"
#include "tangles/oracle.hpp"

namespace tangles::cli {

namespace {

TangleOptions tangle_options(const RunConfig& config) {
  return TangleOptions{config.cap.value_or(kDefaultCap), config.allow_trivial};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << content;
}

// Runs a command body, mapping exceptions onto the exit-code contract.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const ResourceError& e) {
    err << "resource cap: " << e.what() << '\n';
    return kResourceCap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

ConnectivitySystem load(const RunConfig& config) {
  if (config.input.empty()) throw InputError("no --input given");
  auto sys = load_system(config.input, config.kind);
  sys.ground().require_within(config.cap.value_or(kDefaultCap), "input");
  return sys;
}

std::vector<Separation> edge_separations(const ConnectivitySystem& sys, const TreeDecomposition& td) {
  std::vector<Separation> seps;
  for (std::size_t e = 0; e < td.edges.size(); ++e) {
    const Separation s = edge_separation(sys, td, e);
    seps.push_back(s);
    seps.push_back(s.inverse());
  }
  return seps;
}

void report_pairs(const DistinguishReport& report, std::ostream& out) {
  for (const PairCheck& p : report.pairs) {
    if (p.efficient) continue;
    out << "  maximal tangles #" << p.first << " and #" << p.second
        << (p.distinguished ? " are not distinguished efficiently" : " are not distinguished")
        << " (least distinguishing order " << p.min_order << ")\n";
  }
}

}  // namespace

Strategy parse_strategy(const std::string& name) {
  if (name == "greedy") return Strategy::greedy;
  if (name == "stratified") return Strategy::stratified;
  throw InputError("unknown strategy '" + name + "'");
}

Check parse_check(const std::string& name) {
  if (name == "all") return Check::all;
  if (name == "distinguish") return Check::distinguish;
  if (name == "corollary") return Check::corollary;
  if (name == "partition") return Check::partition;
  throw InputError("unknown check '" + name + "'");
}

int cmd_tangles(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto sys = load(config);
    const auto catalog = all_tangles(sys, tangle_options(config));
    const std::string json = catalog_to_json(catalog).dump(2) + "\n";
    if (config.out_tangles.empty()) {
      out << json;
    } else {
      write_file(config.out_tangles, json);
      out << catalog.tangles.size() << " tangles, " << catalog.maximal_indices().size() << " maximal\n";
    }
    return kSuccess;
  });
}

int cmd_decompose(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto sys = load(config);
    const auto catalog = all_tangles(sys, tangle_options(config));

    NestedSet nested;
    if (config.strategy == Strategy::stratified) {
      nested = stratified_construct(sys, catalog);
    } else if (config.seed) {
      nested = greedy_extend(sys, catalog, {}, RandomTieBreak{*config.seed});
    } else {
      nested = greedy_extend(sys, catalog, {});
    }
    if (config.prune) nested = prune_minimal(sys, catalog, nested);

    const TreeDecomposition td = nested_to_tree(sys.ground(), nested.seps);
    bool ok = true;
    if (auto defect = structural_defect(sys.ground(), td)) {
      out << "[FAIL] partition: " << *defect << '\n';
      ok = false;
    }
    const auto distinguish = verify_distinguishing(sys, catalog, edge_separations(sys, td));
    out << (distinguish.ok() ? "[PASS]" : "[FAIL]") << " distinguish: " << distinguish.pairs.size()
        << " pair(s) of maximal tangles\n";
    report_pairs(distinguish, out);
    ok = ok && distinguish.ok();
    if (config.prune) {
      const auto corollary = verify_corollary(sys, td, catalog);
      out << (corollary.ok() ? "[PASS]" : "[FAIL]") << " corollary: " << td.node_count() << " part(s), "
          << catalog.maximal_indices().size() << " maximal tangle(s)\n";
      for (const auto& f : corollary.failures) out << "  " << f << '\n';
      ok = ok && corollary.ok();
    }

    const std::string td_json = td_to_json(sys, td).dump(2) + "\n";
    if (config.out_td.empty()) {
      out << td_json;
    } else {
      write_file(config.out_td, td_json);
    }
    if (!config.out_tangles.empty()) write_file(config.out_tangles, catalog_to_json(catalog).dump(2) + "\n");
    if (!config.dot.empty()) write_file(config.dot, td_to_dot(sys, td));
    return ok ? kSuccess : kVerificationFailed;
  });
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto sys = load(config);
    if (config.td.empty()) throw InputError("no --td given");
    std::ifstream in(config.td);
    if (!in) throw InputError("cannot open " + config.td);
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("decomposition is not valid JSON: ") + e.what());
    }
    const TreeDecomposition td = td_from_json(doc, sys);

    const bool want_partition = config.check == Check::all || config.check == Check::partition;
    const bool want_distinguish = config.check == Check::all || config.check == Check::distinguish;
    const bool want_corollary = config.check == Check::all || config.check == Check::corollary;

    bool ok = true;
    const auto defect = structural_defect(sys.ground(), td);
    if (want_partition) {
      out << (defect ? "[FAIL]" : "[PASS]") << " partition" << (defect ? ": " + *defect : std::string()) << '\n';
    }
    if (defect) {
      // Nothing else is meaningful without a valid tree-decomposition.
      if (!want_partition) out << "[FAIL] decomposition is malformed: " << *defect << '\n';
      return kVerificationFailed;
    }

    const auto catalog = all_tangles(sys, tangle_options(config));
    if (want_distinguish) {
      const auto report = verify_distinguishing(sys, catalog, edge_separations(sys, td));
      out << (report.ok() ? "[PASS]" : "[FAIL]") << " distinguish: every pair of maximal tangles is "
          << "distinguished efficiently by an edge separation\n";
      report_pairs(report, out);
      ok = ok && report.ok();
    }
    if (want_corollary) {
      const auto report = verify_corollary(sys, td, catalog);
      out << (report.ok() ? "[PASS]" : "[FAIL]") << " corollary: every part is home to exactly one maximal tangle\n";
      for (const auto& f : report.failures) out << "  " << f << '\n';
      ok = ok && report.ok();
    }
    return ok ? kSuccess : kVerificationFailed;
  });
}

int cmd_oracle(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.input.empty()) throw InputError("no --input given");
    const auto sys = load_system(config.input, config.kind);
    const std::size_t cap = config.cap.value_or(oracle::kOracleCap);
    const auto brute = oracle::brute_force_tangles(sys, config.allow_trivial, cap);
    const auto catalog = all_tangles(sys, TangleOptions{cap, config.allow_trivial});

    bool match = true;
    const int orders = std::max(static_cast<int>(brute.by_order.size()), catalog.max_order());
    for (int k = 1; k <= orders; ++k) {
      std::vector<std::vector<Side>> engine;
      for (const Tangle& t : catalog.tangles) {
        if (t.order == k) engine.push_back(t.small_sides);
      }
      const auto& expected = k <= static_cast<int>(brute.by_order.size())
                                 ? brute.by_order[static_cast<std::size_t>(k - 1)]
                                 : std::vector<std::vector<Side>>{};
      const bool same = engine == expected;
      match = match && same;
      out << "order " << k << ": oracle " << expected.size() << ", engine " << engine.size()
          << (same ? "" : "  MISMATCH") << '\n';
    }
    out << (match ? "match" : "mismatch") << '\n';
    return match ? kSuccess : kVerificationFailed;
  });
}

}  // namespace tangles::cli
