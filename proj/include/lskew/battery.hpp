#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lskew {

/// One exact identity of the operator algebra, checked over random fields.
struct IdentityResult {
  std::string name;
  double max_residual = 0;
  double tolerance = 0;
  bool pass = true;
};

struct BatteryReport {
  std::uint64_t seed = 0;
  int cases = 0;
  std::vector<IdentityResult> identities;
  bool all_pass = true;
};

/// Runs the full identity battery over `cases` random fields (components
/// uniform in [-10, 10], boosts with |w| <= 0.95), each case seeded
/// independently from `seed`, and reports the maximum observed residual per
/// identity. Deterministic for a given (seed, cases) regardless of thread
/// count. OpenMP-parallel over cases.
BatteryReport run_battery(std::uint64_t seed, int cases);

/// Serial reference implementation; produces identical reports.
BatteryReport run_battery_serial(std::uint64_t seed, int cases);

}  // namespace lskew
