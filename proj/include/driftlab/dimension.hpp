#pragma once

#include <string>

#include "driftlab/config.hpp"
#include "driftlab/entropy.hpp"
#include "driftlab/walker.hpp"

namespace driftlab {

enum class DriftInterpretation { statistical, external_rigorous };

// Drift lower-bound input to the dimension formula.  Statistical inputs
// carry a DriftEstimate and contribute mean - 3 stderr; external inputs
// carry a certified lower bound with a provenance string.
struct DriftInput {
  DriftInterpretation interpretation = DriftInterpretation::statistical;
  DriftEstimate estimate;        // used when statistical
  double rigorous_lower = 0.0;   // used when external_rigorous
  std::string provenance;
};

enum class Verdict { Singular, Inconclusive };

// dim_H(harmonic measure) <= entropy bound / drift lower bound; the measure
// is singular exactly when its dimension is < 1, so an upper bound < 1 is a
// singularity proof (at the strength of its inputs) while >= 1 proves
// nothing.
struct DimensionReport {
  std::string group_id;
  EntropyBound entropy_bound;
  DriftInput drift_input;
  double effective_drift_lower = 0.0;
  double dim_upper = 0.0;
  Verdict verdict = Verdict::Inconclusive;
  std::string confidence_note;
};

// h_upper / ell_lower.  Requires h_upper >= 0 and ell_lower > 0.
double dimension_bound(double h_upper, double ell_lower);

Verdict verdict_of(double dim_upper);

// Rejects closed-form entropy constants that do not apply to this
// generating set (std::invalid_argument).
DimensionReport build_report(const std::string& group_id, const GeneratorSet& gens,
                             const EntropyBound& entropy, const DriftInput& drift);

// Source strings as the command line accepts them.  Entropy: "enumeration",
// "free_group_rank4", "free_product_Z2cubed", or a plain number (an
// externally certified bound, described by `provenance`).  Drift: "mc",
// "exact", "spectral", "reference" (the embedded certified interval for
// gens.id), or a plain number.  Estimator parameters come from `config`.
EntropyBound resolve_entropy_source(const GeneratorSet& gens, const std::string& source,
                                    const std::string& provenance, const RunConfig& config);
DriftInput resolve_drift_source(const GeneratorSet& gens, const std::string& source,
                                const std::string& provenance, const RunConfig& config);

// "Singular", "Singular (statistical)", or "Inconclusive" — a singularity
// verdict resting on a statistical drift bound is always labeled as such.
std::string verdict_label(const DimensionReport& report);

std::string report_text(const DimensionReport& report);

}  // namespace driftlab
