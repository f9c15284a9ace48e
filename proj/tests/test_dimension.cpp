#include <cmath>

#include "doctest.h"
#include "driftlab/dimension.hpp"
#include "driftlab/groups.hpp"
#include "driftlab/table1.hpp"

using namespace driftlab;

TEST_CASE("dimension bound arithmetic and validation") {
  CHECK(dimension_bound(1.5, 2.0) == doctest::Approx(0.75));
  CHECK_THROWS_AS(dimension_bound(-0.1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(dimension_bound(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(dimension_bound(1.0, -2.0), std::invalid_argument);
}

TEST_CASE("verdict thresholds") {
  CHECK(verdict_of(0.999) == Verdict::Singular);
  CHECK(verdict_of(1.0) == Verdict::Inconclusive);
  CHECK(verdict_of(1.5) == Verdict::Inconclusive);
}

TEST_CASE("octagon closed-form pipeline") {
  GroupBundle bolza = preset_group("bolza");
  EntropyBound entropy = closed_form_bound(EntropySource::free_group_rank4);
  DriftInput drift;
  drift.interpretation = DriftInterpretation::external_rigorous;
  drift.rigorous_lower = 1.690771;
  drift.provenance = "certified interval, lower endpoint";
  DimensionReport report = build_report("bolza", bolza.gens, entropy, drift);
  CHECK(report.dim_upper == doctest::Approx(0.75 * std::log(7.0) / 1.690771).epsilon(1e-15));
  CHECK(std::abs(report.dim_upper - 0.86317) < 2e-5);
  CHECK(report.verdict == Verdict::Singular);
  CHECK(verdict_label(report) == "Singular");
  CHECK(report.effective_drift_lower == 1.690771);
}

TEST_CASE("triangle closed-form pipeline across the singularity boundary") {
  EntropyBound entropy = closed_form_bound(EntropySource::free_product_Z2cubed);

  struct Row {
    const char* id;
    bool singular;
  };
  for (Row row : {Row{"triangle:8,8,8", true}, Row{"triangle:9,9,9", true},
                  Row{"triangle:10,10,10", true}, Row{"triangle:7,7,7", false}}) {
    GroupBundle bundle = preset_group(row.id);
    const ReferenceInterval* interval = find_reference_interval(row.id);
    REQUIRE(interval != nullptr);
    DriftInput drift;
    drift.interpretation = DriftInterpretation::external_rigorous;
    drift.rigorous_lower = interval->lower;
    drift.provenance = interval->citation;
    DimensionReport report = build_report(row.id, bundle.gens, entropy, drift);
    if (row.singular) {
      CHECK(report.verdict == Verdict::Singular);
      CHECK(report.dim_upper < 1.0);
    } else {
      CHECK(report.verdict == Verdict::Inconclusive);
      CHECK(report.dim_upper >= 1.0);
    }
  }

  GroupBundle eight = preset_group("triangle:8,8,8");
  DriftInput drift;
  drift.interpretation = DriftInterpretation::external_rigorous;
  drift.rigorous_lower = 0.232248419011566;
  DimensionReport report = build_report("triangle:8,8,8", eight.gens, entropy, drift);
  CHECK(std::abs(report.dim_upper - 0.99484) < 1e-5);
}

TEST_CASE("statistical drift inputs are labeled as such") {
  GroupBundle bundle = preset_group("triangle:8,8,8");
  EntropyBound entropy = closed_form_bound(EntropySource::free_product_Z2cubed);
  DriftInput drift;
  drift.interpretation = DriftInterpretation::statistical;
  drift.estimate.mean = 0.24;
  drift.estimate.stderr_ = 0.001;
  drift.estimate.method = DriftMethod::monte_carlo;
  DimensionReport report = build_report("triangle:8,8,8", bundle.gens, entropy, drift);
  CHECK(report.effective_drift_lower == doctest::Approx(0.24 - 0.003).epsilon(1e-15));
  CHECK(report.verdict == Verdict::Singular);
  CHECK(verdict_label(report) == "Singular (statistical)");
  CHECK(report.confidence_note.find("statistical") != std::string::npos);
}

TEST_CASE("exact-method inputs carry a bias caution") {
  GroupBundle bundle = preset_group("triangle:8,8,8");
  EntropyBound entropy = closed_form_bound(EntropySource::free_product_Z2cubed);
  DriftInput drift;
  drift.interpretation = DriftInterpretation::statistical;
  drift.estimate.mean = 0.25;
  drift.estimate.stderr_ = 0.0;
  drift.estimate.method = DriftMethod::exact;
  DimensionReport report = build_report("triangle:8,8,8", bundle.gens, entropy, drift);
  CHECK(report.confidence_note.find("not a lower bound") != std::string::npos);
}

TEST_CASE("inapplicable closed forms are rejected") {
  GroupBundle triangle = preset_group("triangle:4,4,4");
  GroupBundle bolza = preset_group("bolza");
  DriftInput drift;
  drift.interpretation = DriftInterpretation::external_rigorous;
  drift.rigorous_lower = 0.2;
  CHECK_THROWS_AS(build_report("triangle:4,4,4", triangle.gens,
                               closed_form_bound(EntropySource::free_group_rank4), drift),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_report("bolza", bolza.gens,
                               closed_form_bound(EntropySource::free_product_Z2cubed), drift),
                  std::invalid_argument);
}

TEST_CASE("external entropy bounds pass straight through") {
  GroupBundle bundle = preset_group("triangle:4,4,4");
  EntropyBound entropy;
  entropy.value = 0.5;
  entropy.h_n = 0.5;
  entropy.n = 0;
  entropy.source = EntropySource::external;
  entropy.provenance = "worked example";
  DriftInput drift;
  drift.interpretation = DriftInterpretation::external_rigorous;
  drift.rigorous_lower = 1.0;
  DimensionReport report = build_report("triangle:4,4,4", bundle.gens, entropy, drift);
  CHECK(report.dim_upper == doctest::Approx(0.5));
  CHECK(report.confidence_note.find("worked example") != std::string::npos);
}

TEST_CASE("report text shows the verdict and the inputs") {
  GroupBundle bolza = preset_group("bolza");
  EntropyBound entropy = closed_form_bound(EntropySource::free_group_rank4);
  DriftInput drift;
  drift.interpretation = DriftInterpretation::external_rigorous;
  drift.rigorous_lower = 1.690771;
  DimensionReport report = build_report("bolza", bolza.gens, entropy, drift);
  std::string text = report_text(report);
  CHECK(text.find("bolza") != std::string::npos);
  CHECK(text.find("Singular") != std::string::npos);
  CHECK(text.find("0.86317") != std::string::npos);
}

TEST_CASE("source string resolution") {
  GroupBundle bundle = preset_group("triangle:8,8,8");
  RunConfig cfg;
  cfg.group = "triangle:8,8,8";
  cfg.n = 50;
  cfg.N = 50;

  EntropyBound closed = resolve_entropy_source(bundle.gens, "free_product_Z2cubed", "", cfg);
  CHECK(closed.source == EntropySource::free_product_Z2cubed);

  EntropyBound numeric = resolve_entropy_source(bundle.gens, "0.25", "survey table", cfg);
  CHECK(numeric.source == EntropySource::external);
  CHECK(numeric.value == 0.25);
  CHECK(numeric.provenance == "survey table");

  CHECK_THROWS_AS(resolve_entropy_source(bundle.gens, "austerity", "", cfg),
                  std::invalid_argument);
  CHECK_THROWS_AS(resolve_entropy_source(bundle.gens, "-0.5", "", cfg),
                  std::invalid_argument);

  DriftInput ref = resolve_drift_source(bundle.gens, "reference", "", cfg);
  CHECK(ref.interpretation == DriftInterpretation::external_rigorous);
  CHECK(ref.rigorous_lower == 0.232248419011566);

  DriftInput mc = resolve_drift_source(bundle.gens, "mc", "", cfg);
  CHECK(mc.interpretation == DriftInterpretation::statistical);
  CHECK(mc.estimate.method == DriftMethod::monte_carlo);
  CHECK(mc.estimate.n == 50);

  DriftInput num = resolve_drift_source(bundle.gens, "0.2", "certified elsewhere", cfg);
  CHECK(num.rigorous_lower == 0.2);
  CHECK(num.provenance == "certified elsewhere");

  CHECK_THROWS_AS(resolve_drift_source(bundle.gens, "psychic", "", cfg),
                  std::invalid_argument);
  CHECK_THROWS_AS(resolve_drift_source(bundle.gens, "0", "", cfg), std::invalid_argument);
}
