#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cliff/instances.hpp"

namespace cliff {

struct SelftestEntry {
  std::string name;
  bool pass;
  std::string detail;  // empty on pass
};

struct SelftestReport {
  std::vector<SelftestEntry> entries;

  bool all_pass() const;
  const SelftestEntry* first_failure() const;
};

// Runs the identity suite (trace/pi symmetry, Reynolds projector, the
// intertwining and product formulas, the double-sum identities, commutation
// counts, profile dichotomy, sigma round trips, solve round trips) on
// `trials` seeded random instances. Exact fields assert equality; the float
// field checks residuals against the tolerance.
SelftestReport run_selftest(const Signature& sig, const FieldKind& kind, std::uint64_t seed,
                            int trials);

}  // namespace cliff
