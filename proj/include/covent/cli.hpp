// Command-line surface. run_cli() is the whole program; tools/covent.cpp
// only forwards argv to it.
//
// Exit codes: 0 success, 1 a verification check failed, 2 bad configuration
// (including invalid dimension/p4 and unwritable output paths).

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace covent {

struct RunConfig {
  std::string command;
  int dim = 4;
  int dim_min = 3;
  int dim_max = 6;
  int grid = 10;
  double p4 = 0.0;
  std::uint64_t seed = 42;
  int samples = 50;
  double tol = 1e-9;
  std::string out;  // empty: stdout
  bool random_input = false;

  /// Empty string when valid, otherwise the first problem found.
  std::string validate() const;
};

struct VerifyCheck {
  std::string name;
  double tolerance = 0.0;
  double worst = 0.0;
  bool passed = false;
};

/// The analytic-vs-numeric suite over D in [2, dim_max].
std::vector<VerifyCheck> run_verify_suite(const RunConfig& config);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace covent
