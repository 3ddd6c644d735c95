#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "tangles/cli.hpp"
#include "tangles/errors.hpp"

using tangles::cli::RunConfig;

namespace {

struct RawOptions {
  std::string kind = "auto";
  std::string strategy = "greedy";
  std::string check = "all";
  std::uint64_t seed = 0;
  std::size_t cap = 0;
};

void add_input_options(CLI::App* cmd, RunConfig& config, RawOptions& raw) {
  cmd->add_option("--input", config.input, "graph, matroid or table file")->required();
  cmd->add_option("--kind", raw.kind, "graph | matroid | table | auto")
      ->check(CLI::IsMember({"auto", "graph", "matroid", "table"}));
  cmd->add_option("--cap", raw.cap, "override the element cap of exhaustive algorithms");
  cmd->add_flag("--allow-trivial", config.allow_trivial,
                "allow the complement of a single element to be small");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tangles of symmetric submodular order functions and tree-decompositions that distinguish them"};
  app.require_subcommand(1);

  RunConfig config;
  RawOptions raw;

  auto* tangles_cmd = app.add_subcommand("tangles", "enumerate all tangles and write the catalog as JSON");
  add_input_options(tangles_cmd, config, raw);
  tangles_cmd->add_option("--out-tangles", config.out_tangles, "catalog JSON path (stdout if omitted)");

  auto* decompose_cmd = app.add_subcommand("decompose", "build and verify a tangle-distinguishing tree-decomposition");
  add_input_options(decompose_cmd, config, raw);
  decompose_cmd->add_option("--strategy", raw.strategy, "greedy | stratified")
      ->check(CLI::IsMember({"greedy", "stratified"}));
  auto* seed_opt = decompose_cmd->add_option("--seed", raw.seed, "random tie-break seed for the greedy strategy");
  decompose_cmd->add_flag("--prune", config.prune, "prune to a minimal distinguishing set");
  decompose_cmd->add_option("--out-tangles", config.out_tangles, "catalog JSON path");
  decompose_cmd->add_option("--out-td", config.out_td, "decomposition JSON path (stdout if omitted)");
  decompose_cmd->add_option("--dot", config.dot, "Graphviz output path");

  auto* verify_cmd = app.add_subcommand("verify", "check a decomposition from first principles");
  add_input_options(verify_cmd, config, raw);
  verify_cmd->add_option("--td", config.td, "decomposition JSON to check")->required();
  verify_cmd->add_option("--check", raw.check, "all | distinguish | corollary | partition")
      ->check(CLI::IsMember({"all", "distinguish", "corollary", "partition"}));

  auto* oracle_cmd = app.add_subcommand("oracle", "compare the tangle engine with a brute-force search");
  add_input_options(oracle_cmd, config, raw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return tangles::cli::kInputError;
  }

  try {
    config.kind = tangles::parse_input_kind(raw.kind);
    config.strategy = tangles::cli::parse_strategy(raw.strategy);
    config.check = tangles::cli::parse_check(raw.check);
  } catch (const tangles::InputError& e) {
    std::cerr << e.what() << '\n';
    return tangles::cli::kInputError;
  }
  if (raw.cap > 0) config.cap = raw.cap;
  if (seed_opt->count() > 0) config.seed = raw.seed;

  if (tangles_cmd->parsed()) return tangles::cli::cmd_tangles(config, std::cout, std::cerr);
  if (decompose_cmd->parsed()) return tangles::cli::cmd_decompose(config, std::cout, std::cerr);
  if (verify_cmd->parsed()) return tangles::cli::cmd_verify(config, std::cout, std::cerr);
  return tangles::cli::cmd_oracle(config, std::cout, std::cerr);
}
