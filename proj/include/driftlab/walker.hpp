#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "driftlab/groups.hpp"
#include "driftlab/rng.hpp"

namespace driftlab {

struct WalkConfig {
  int n = 1000;                 // steps per walk
  int N = 1000;                 // independent trials
  std::uint64_t seed = 1;
  complexd base_point{0.0, 0.0};
  int renormalize_every = 64;
  int threads = 0;              // 0 = hardware concurrency
};

enum class DriftMethod { monte_carlo, exact, spectral };

struct DriftEstimate {
  double mean = 0.0;
  double stderr_ = 0.0;
  int n = 0;
  std::int64_t N = 0;
  DriftMethod method = DriftMethod::monte_carlo;
};

struct BoundarySample {
  std::vector<double> angles;  // in [0, 2pi)
  int n = 0;
  double converged_fraction = 1.0;  // share of endpoints with 1 - |z| < 1e-6
  bool warning = false;             // set when that share drops below 99%
};

// One walk of n uniform steps over the closure, left-to-right product with
// magnitude renormalization every renormalize_every steps.  Left-to-right
// is distributionally identical to the word order of the walk because the
// increments are i.i.d.  Returns the accumulated isometry; displacement is
// displacement_of(result).
Isometry run_walk(const std::vector<LabeledIsometry>& closure,
                  const std::vector<double>& step_distribution, int n,
                  SplitMix64& rng, int renormalize_every = 64);

// Closure indices of one sampled walk (the trial-0 stream for this seed);
// feed to orbit rendering or replay.
std::vector<int> sample_walk_indices(const GeneratorSet& gens, int n, std::uint64_t seed);

// Monte Carlo estimate of E d(w_n 0, 0) / n.  Trials are deterministic per
// (seed, trial index) and the reduction is a fixed sequential sum, so the
// result is bit-identical no matter how many threads run.  The estimator is
// biased upward at finite n (E d_n / n decreases to the drift by
// subadditivity).
DriftEstimate estimate_drift_mc(const GeneratorSet& gens, const WalkConfig& config);

// Exact E d_n / n by depth-first enumeration of all |closure|^n words,
// probability-weighted by the step distribution.  stderr is 0 by
// definition.  Throws std::length_error past the enumeration budget.
DriftEstimate exact_mean_displacement(const GeneratorSet& gens, int n,
                                      std::size_t budget = 0 /* 0 = default */);

// Endpoint angles of N walks of length n: the empirical picture of the
// boundary hitting distribution.
BoundarySample sample_harmonic_measure(const GeneratorSet& gens, int n, int N,
                                       std::uint64_t seed);

// Equal-width histogram over [0, 2pi); returns per-bin counts.
std::vector<std::int64_t> angle_histogram(const std::vector<double>& angles, int bins);

std::string method_name(DriftMethod m);

}  // namespace driftlab
