#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "driftlab/groups.hpp"
#include "driftlab/walker.hpp"

namespace driftlab {

// Certified drift interval shipped as a read-only reference value.  These
// are external inputs to this toolkit (its own estimates are statistical,
// never certified); the citation string records what each interval is.
struct ReferenceInterval {
  std::string group_id;   // "triangle:k,l,m", "bolza", "gutzwiller"
  int k = 0, l = 0, m = 0;  // 0 for the octagon entries
  double lower = 0.0;
  double upper = 0.0;
  std::string citation;
};

// The 23 (k,l,m) reflection-group rows of the embedded reference table,
// with all published digits.
const std::vector<ReferenceInterval>& reference_drift_table();

// Certified interval for the octagon side-pairing walk (the drift is the
// same for the opposite-side and alternating-side pairings).
const ReferenceInterval& octagon_reference_interval();

// Lookup across the 23 rows plus "bolza"/"gutzwiller"; nullptr if absent.
const ReferenceInterval* find_reference_interval(const std::string& group_id);

enum class RowStatus { consistent, tension };

// Pure status rule: CONSISTENT iff mean - 3 stderr <= upper (not too high
// beyond noise) and mean + allowance >= lower (not too low beyond the
// finite-n bias allowance).
RowStatus harness_row_status(double mean, double stderr_, double lower, double upper,
                             double allowance);

// Finite-n bias allowance C/n for the Monte Carlo mean at walk length n.
// The exact mean displacement decays like ell + C/(2j) at small lengths j,
// so C is read off the j = 4 -> 8 gap: C = 8 (exact_4 - exact_8).
double bias_allowance(const GeneratorSet& gens, int n);

struct HarnessRow {
  ReferenceInterval reference;
  DriftEstimate estimate;
  double allowance = 0.0;
  RowStatus status = RowStatus::consistent;
};

struct HarnessReport {
  std::vector<HarnessRow> rows;
  int consistent_count = 0;
  std::vector<double> kkk_means;        // (k,k,k) means for k = 4..10
  bool kkk_strictly_increasing = false;
};

struct HarnessConfig {
  int n = 100000;  // walk length per row
  int N = 10000;   // trials per row
  std::uint64_t seed = 1;
  int threads = 0;  // 0 = hardware concurrency
  std::function<void(const HarnessRow&)> on_row;  // partial-result flush
};

HarnessRow run_harness_row(const ReferenceInterval& row, const HarnessConfig& config,
                           std::uint64_t row_seed);

// Runs all 23 rows and the (k,k,k) monotonicity scan.
HarnessReport run_table1_harness(const HarnessConfig& config = {});

std::string harness_text(const HarnessReport& report);
std::string harness_header();
std::string harness_row_text(const HarnessRow& row);
std::string row_status_name(RowStatus s);

}  // namespace driftlab
