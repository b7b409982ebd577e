#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mubkit/galois.hpp"
#include "mubkit/linalg.hpp"
#include "mubkit/random.hpp"
#include "mubkit/serialize.hpp"

namespace mubkit::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2 };

struct RunConfig {
  int dim = 0;
  Construction construction = Construction::mod_n;
  double tol = kDefaultTol;
  std::uint64_t seed = kDefaultSeed;
  bool json = false;
  std::optional<std::string> output;
  std::optional<int> shots;
  std::optional<std::string> input;
  std::string state = "random";
};

/// Verification suites, one per module. Each returns named checks.
Report field_checks(const FiniteStructure& s);
Report mub_checks(const FiniteStructure& s, double tol);
Report pauli_checks(const FiniteStructure& s, double tol, std::uint64_t seed);
Report bell_checks(const FiniteStructure& s, double tol, std::uint64_t seed);
Report tomo_checks(const FiniteStructure& s, double tol, std::uint64_t seed);

/// Parses `args` (without the program name) and runs the command, writing
/// reports to `out` (or --output) and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mubkit::cli
