#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace driftlab {

// One run's parameter bundle.  Serialized as flat `key = value` text;
// parsing is strict: unknown keys, malformed values, and out-of-range
// numbers all fail before any computation starts.
struct RunConfig {
  std::string group = "triangle:4,4,4";
  std::string method = "mc";  // mc | exact | spectral
  int n = 1000;               // walk length
  std::int64_t N = 1000;      // Monte Carlo trials
  std::uint64_t seed = 1;
  int spectral_M = 1024;      // boundary grid size
  double spectral_h = 1e-3;   // pressure-derivative step
  int entropy_n_max = 8;
  double key_grid = 1e-8;     // element-identification cell width
  double key_audit_tol = 1e-6;
  int render_radius = 4;
  double stroke_width = 0.0035;
  int canvas_size = 800;
  int threads = 0;            // 0 = hardware concurrency
  std::uint64_t budget = 0;   // enumeration budget; 0 = library default
  std::string out;            // output file ("" = stdout)
  std::string results_path;   // JSON-lines record store ("" = off)
  bool json = false;          // machine-readable output
};

// Keys accepted by the parser, in canonical order.
const std::vector<std::string>& config_keys();

// Throws std::invalid_argument naming the offending line/key on unknown
// keys, malformed values, or failed validation.
RunConfig parse_config_text(const std::string& text, const RunConfig& base = {});
RunConfig parse_config_file(const std::string& path, const RunConfig& base = {});

// Assigns one `key = value` pair (the CLI funnels flag overrides through
// this too, so flags and file entries have identical semantics).
void apply_config_entry(RunConfig& config, const std::string& key, const std::string& value);

// Positivity and range checks; throws std::invalid_argument.
void validate_config(const RunConfig& config);

// Canonical `key = value` rendering; parse_config_text round-trips it.
std::string config_to_text(const RunConfig& config);

}  // namespace driftlab
