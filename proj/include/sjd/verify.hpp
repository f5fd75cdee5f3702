#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sjd/dynamics.hpp"

namespace sjd {

struct InvariantResult {
  std::string name;
  int samples = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<InvariantResult> results;

  bool all_pass() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }
};

/// Run the full invariant suite.  Deterministic for a given (seed, samples).
/// inject_fc_bug flips a sign inside the FC map used by the pullback check,
/// as a negative control for the harness itself.
VerifyReport run_verification(std::uint64_t seed, int samples,
                              bool inject_fc_bug = false);

}  // namespace sjd
