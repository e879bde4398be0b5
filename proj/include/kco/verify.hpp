#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kco {

struct CheckResult {
  std::string key;
  std::string description;
  bool pass = false;
  std::string detail;  // worst margins / residuals observed
  double seconds = 0.0;
};

// Runs the numerical identity suite up to complex dimension nmax (expensive
// checks are capped at nmax; scalar character identities always run to their
// full stated range). Every randomized check derives its stream from (seed,
// check id) so results are order-independent.
std::vector<CheckResult> run_verification(int nmax, std::uint64_t seed);

// True iff every check passed.
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace kco
