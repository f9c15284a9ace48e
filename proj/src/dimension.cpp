#include "driftlab/dimension.hpp"

#include <cstdio>
#include <stdexcept>

#include "driftlab/spectral.hpp"
#include "driftlab/table1.hpp"

namespace driftlab {

double dimension_bound(double h_upper, double ell_lower) {
  if (h_upper < 0.0)
    throw std::invalid_argument("dimension_bound: entropy bound must be >= 0");
  if (ell_lower <= 0.0)
    throw std::invalid_argument("dimension_bound: drift lower bound must be positive");
  return h_upper / ell_lower;
}

Verdict verdict_of(double dim_upper) {
  return dim_upper < 1.0 ? Verdict::Singular : Verdict::Inconclusive;
}

DimensionReport build_report(const std::string& group_id, const GeneratorSet& gens,
                             const EntropyBound& entropy, const DriftInput& drift) {
  bool closed_form = entropy.source == EntropySource::free_group_rank4 ||
                     entropy.source == EntropySource::free_product_Z2cubed;
  if (closed_form && !closed_form_applicable(entropy.source, gens))
    throw std::invalid_argument("build_report: entropy constant " +
                                entropy_source_name(entropy.source) +
                                " does not apply to this group (applies to " +
                                closed_form_applicability_note(entropy.source) + ")");

  DimensionReport r;
  r.group_id = group_id;
  r.entropy_bound = entropy;
  r.drift_input = drift;
  if (drift.interpretation == DriftInterpretation::statistical) {
    r.effective_drift_lower = drift.estimate.mean - 3.0 * drift.estimate.stderr_;
    r.confidence_note = "drift lower bound is statistical (mean - 3 stderr, " +
                        method_name(drift.estimate.method) +
                        "), not certified; the verdict inherits that status";
  } else {
    r.effective_drift_lower = drift.rigorous_lower;
    r.confidence_note = "drift lower bound is an external certified value (" +
                        (drift.provenance.empty() ? std::string("unspecified source")
                                                  : drift.provenance) +
                        ")";
  }
  r.confidence_note += "; entropy bound source: " + entropy_source_name(entropy.source);
  if (!entropy.provenance.empty()) r.confidence_note += " (" + entropy.provenance + ")";
  if (drift.interpretation == DriftInterpretation::statistical &&
      drift.estimate.method == DriftMethod::exact)
    r.confidence_note +=
        "; caution: the exact mean displacement at finite n sits above the true "
        "drift, so this input is not a lower bound";
  r.dim_upper = dimension_bound(entropy.value, r.effective_drift_lower);
  r.verdict = verdict_of(r.dim_upper);
  return r;
}

std::string verdict_label(const DimensionReport& report) {
  if (report.verdict == Verdict::Inconclusive) return "Inconclusive";
  return report.drift_input.interpretation == DriftInterpretation::statistical
             ? "Singular (statistical)"
             : "Singular";
}

std::string report_text(const DimensionReport& report) {
  char buf[256];
  std::string out;
  out += "group:                 " + report.group_id + "\n";
  std::snprintf(buf, sizeof buf, "entropy upper bound:   %.12f nats (%s",
                report.entropy_bound.value,
                entropy_source_name(report.entropy_bound.source).c_str());
  out += buf;
  if (report.entropy_bound.n > 0) {
    std::snprintf(buf, sizeof buf, ", n = %d", report.entropy_bound.n);
    out += buf;
  }
  out += ")\n";
  std::snprintf(buf, sizeof buf, "drift lower bound:     %.15f\n",
                report.effective_drift_lower);
  out += buf;
  std::snprintf(buf, sizeof buf, "dimension upper bound: %.12f\n", report.dim_upper);
  out += buf;
  out += "verdict:               " + verdict_label(report) + "\n";
  out += "note:                  " + report.confidence_note + "\n";
  return out;
}

namespace {

bool parse_number(const std::string& s, double& out) {
  try {
    std::size_t pos = 0;
    out = std::stod(s, &pos);
    return pos == s.size();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

EntropyBound resolve_entropy_source(const GeneratorSet& gens, const std::string& source,
                                    const std::string& provenance, const RunConfig& config) {
  if (source == "enumeration") {
    KeyOptions keys;
    keys.grid = config.key_grid;
    keys.audit_tol = config.key_audit_tol;
    std::vector<EntropyBound> bounds =
        avez_upper_bounds(gens, config.entropy_n_max,
                          config.budget ? static_cast<std::size_t>(config.budget) : 0, keys);
    EntropyBound best = bounds.front();
    for (const EntropyBound& b : bounds)
      if (b.value < best.value) best = b;
    return best;
  }
  if (source == "free_group_rank4") return closed_form_bound(EntropySource::free_group_rank4);
  if (source == "free_product_Z2cubed")
    return closed_form_bound(EntropySource::free_product_Z2cubed);
  double v = 0.0;
  if (!parse_number(source, v))
    throw std::invalid_argument(
        "dimension: entropy source must be enumeration, free_group_rank4, "
        "free_product_Z2cubed or a number, got '" +
        source + "'");
  if (!(v >= 0.0)) throw std::invalid_argument("dimension: entropy bound must be >= 0");
  EntropyBound b;
  b.value = v;
  b.h_n = v;
  b.n = 0;
  b.source = EntropySource::external;
  b.provenance = provenance.empty() ? "user-supplied entropy bound" : provenance;
  return b;
}

DriftInput resolve_drift_source(const GeneratorSet& gens, const std::string& source,
                                const std::string& provenance, const RunConfig& config) {
  DriftInput input;
  if (source == "mc") {
    WalkConfig wc;
    wc.n = config.n;
    if (config.N > 1000000000)
      throw std::invalid_argument("config: N too large for one process");
    wc.N = static_cast<int>(config.N);
    wc.seed = config.seed;
    wc.threads = config.threads;
    input.interpretation = DriftInterpretation::statistical;
    input.estimate = estimate_drift_mc(gens, wc);
    return input;
  }
  if (source == "exact") {
    input.interpretation = DriftInterpretation::statistical;
    input.estimate = exact_mean_displacement(
        gens, config.n, config.budget ? static_cast<std::size_t>(config.budget) : 0);
    return input;
  }
  if (source == "spectral") {
    input.interpretation = DriftInterpretation::statistical;
    input.estimate = spectral_drift(gens, config.spectral_M, config.spectral_h);
    return input;
  }
  if (source == "reference") {
    const ReferenceInterval* row = find_reference_interval(gens.id);
    if (!row)
      throw std::invalid_argument("dimension: no reference drift interval for group '" +
                                  gens.id + "'");
    input.interpretation = DriftInterpretation::external_rigorous;
    input.rigorous_lower = row->lower;
    input.provenance = row->citation;
    return input;
  }
  double v = 0.0;
  if (!parse_number(source, v))
    throw std::invalid_argument(
        "dimension: drift source must be mc, exact, spectral, reference or a number, got '" +
        source + "'");
  if (!(v > 0.0)) throw std::invalid_argument("dimension: drift lower bound must be > 0");
  input.interpretation = DriftInterpretation::external_rigorous;
  input.rigorous_lower = v;
  input.provenance = provenance.empty() ? "user-supplied drift lower bound" : provenance;
  return input;
}

}  // namespace driftlab
