#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "tangles/io.hpp"

namespace tangles::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kInputError = 2,
  kResourceCap = 3,
};

enum class Strategy { greedy, stratified };
enum class Check { all, distinguish, corollary, partition };

struct RunConfig {
  std::string input;
  InputKind kind = InputKind::automatic;
  Strategy strategy = Strategy::greedy;
  std::optional<std::uint64_t> seed;  // randomised greedy tie-break when set
  bool prune = false;
  bool allow_trivial = false;
  std::string out_tangles;
  std::string out_td;
  std::string dot;
  std::string td;  // decomposition to check (verify)
  std::optional<std::size_t> cap;
  Check check = Check::all;
};

Strategy parse_strategy(const std::string& name);
Check parse_check(const std::string& name);

int cmd_tangles(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_decompose(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_oracle(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace tangles::cli
