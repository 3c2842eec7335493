#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "descents/counting.hpp"

namespace descents {

struct VerifyOptions {
  int p_max = 6;
  std::uint64_t property_seed = 0x5eed;
  // Test-only hook, applied to each freshly built reference row; lets the
  // test suite inject a corrupted table and watch the checks trip.
  std::function<void(BitsRow&, int p)> tamper;
};

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // first failing case, empty on success
};

struct VerifyReport {
  bool ok = false;
  std::vector<VerifyCheck> checks;
};

// Runs every cross-check wired into the library: five-way algorithm
// agreement against the brute-force oracle, table symmetries, row sums,
// boundary entries, the deletion identity, the numerator/count equality,
// Eulerian and Mahonian aggregation against brute force, the moment
// consistency property, and the generating-function identity.
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace descents
