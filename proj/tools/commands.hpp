#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "mgonal/escalator.hpp"
#include "mgonal/lattice.hpp"

namespace mgonal::cli {

enum ExitCode : int {
  kOk = 0,
  kConformanceFailure = 2,
  kResourceCap = 3,
  kUsage = 64,
};

struct RunConfig {
  std::string command;
  int m = 0;
  std::uint64_t bound = kDefaultBound;
  int max_depth = kDefaultDepth;
  std::size_t node_cap = kDefaultNodeCap;
  std::uint64_t cell_cap = kDefaultCellCap;
  std::vector<std::int64_t> primes;
  bool strict = false;
  std::string out;

  // density
  std::vector<std::uint32_t> gram;
  std::int64_t conductor = 1;
  std::int64_t c = 0;
  std::string h_spec;  // "1..50", "8,16,2/3"; empty: admissible sweep
  int sweep_count = 20;
  bool case_bounds = false;
  bool inject_bug = false;

  // guy
  int ell = 0;
  int grid_m_max = 0;

  // tau
  int t = 1;
  std::int64_t alpha = 1;
};

/// Parses argv (argv[0] is the program name) and runs the subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_tree(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_gamma(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_density(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_guy(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_tau(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// "1..5,8,2/3" -> rationals. Throws DomainError on malformed input.
std::vector<Rational> parse_targets(const std::string& spec);

}  // namespace mgonal::cli
