// Acceptance suite: run one criterion per invocation (--criterion N) and
// print a single pass/fail line.  Each criterion checks its own runtime
// budget; the ctest TIMEOUT is only a hang backstop.
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "driftlab/dimension.hpp"
#include "driftlab/entropy.hpp"
#include "driftlab/geodesic.hpp"
#include "driftlab/groups.hpp"
#include "driftlab/render.hpp"
#include "driftlab/rng.hpp"
#include "driftlab/spectral.hpp"
#include "driftlab/table1.hpp"
#include "driftlab/walker.hpp"

using namespace driftlab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

void note(Outcome& o, bool ok, const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  if (!ok) o.pass = false;
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += buf;
  if (!ok) o.detail += " [FAILED]";
}

complexd random_interior(SplitMix64& rng, double rmax = 0.9) {
  double r = rmax * std::sqrt(rng.next_unit());
  double t = 2.0 * M_PI * rng.next_unit();
  return std::polar(r, t);
}

Isometry random_isometry(SplitMix64& rng) {
  Isometry g = rotation(2.0 * M_PI * rng.next_unit());
  g = compose(g, translation_along_real_axis(3.0 * rng.next_unit()));
  g = compose(g, rotation(2.0 * M_PI * rng.next_unit()));
  if (rng.next_unit() < 0.5) {
    Isometry conj_map;
    conj_map.antiholomorphic = true;
    g = compose(g, conj_map);
  }
  return g;
}

// 1. Every defining relator of the 23 reference triangle groups and the
//    Bolza group evaluates to +-identity within 1e-9.
Outcome criterion_1() {
  Outcome o;
  double worst = 0.0;
  int groups = 0;
  for (const auto& [k, l, m] : reference_triangles()) {
    RelatorReport report = verify_relators(build_triangle_group(k, l, m).gens, 1e-9);
    for (const RelatorCheck& c : report.checks) worst = std::max(worst, c.deviation);
    if (!report.all_pass) note(o, false, "triangle:%d,%d,%d relators fail", k, l, m);
    ++groups;
  }
  RelatorReport bolza = verify_relators(build_octagon_group(bolza_pairing()).gens, 1e-9);
  for (const RelatorCheck& c : bolza.checks) worst = std::max(worst, c.deviation);
  if (!bolza.all_pass) note(o, false, "bolza relators fail");
  ++groups;
  note(o, worst < 1e-9, "%d groups, max relator deviation %.2e", groups, worst);
  return o;
}

// 2. Randomized isometry properties, 1e4 cases each.
Outcome criterion_2() {
  Outcome o;
  const int cases = 10000;
  SplitMix64 rng(2026);

  double worst_metric = 0.0;
  for (int i = 0; i < cases; ++i) {
    Isometry g = random_isometry(rng);
    complexd z = random_interior(rng), w = random_interior(rng);
    worst_metric = std::max(
        worst_metric,
        std::abs(hyp_distance(apply(g, z), apply(g, w)) - hyp_distance(z, w)));
  }
  note(o, worst_metric < 1e-9, "metric invariance %.2e", worst_metric);

  double worst_chain = 0.0;
  for (int i = 0; i < cases; ++i) {
    Isometry g = random_isometry(rng), h = random_isometry(rng);
    BoundaryPoint xi{2.0 * M_PI * rng.next_unit()};
    double chain = boundary_derivative(g, apply(h, xi)) * boundary_derivative(h, xi);
    double direct = boundary_derivative(compose(g, h), xi);
    worst_chain = std::max(worst_chain, std::abs(direct - chain) / std::max(1.0, chain));
  }
  note(o, worst_chain < 1e-10, "chain rule %.2e", worst_chain);

  double worst_inv = 0.0;
  for (int i = 0; i < cases; ++i) {
    complexd p = random_interior(rng), q = random_interior(rng);
    if (std::abs(p - q) < 1e-2) {
      --i;
      continue;
    }
    Isometry r = reflection_in_geodesic(p, q);
    worst_inv = std::max(worst_inv, deviation_from_identity(compose(r, r)));
  }
  note(o, worst_inv < 1e-10, "involution %.2e", worst_inv);

  double worst_assoc = 0.0;
  for (int i = 0; i < cases; ++i) {
    Isometry f = random_isometry(rng), g = random_isometry(rng), h = random_isometry(rng);
    complexd z = random_interior(rng);
    worst_assoc = std::max(
        worst_assoc,
        std::abs(apply(compose(compose(f, g), h), z) - apply(compose(f, compose(g, h)), z)));
  }
  note(o, worst_assoc < 1e-10, "associativity %.2e", worst_assoc);

  double worst_boundary = 0.0;
  for (int i = 0; i < cases; ++i) {
    Isometry g = random_isometry(rng);
    complexd xi = std::polar(1.0, 2.0 * M_PI * rng.next_unit());
    worst_boundary = std::max(worst_boundary, std::abs(std::abs(apply(g, xi)) - 1.0));
  }
  note(o, worst_boundary < 1e-12, "boundary preservation %.2e", worst_boundary);
  return o;
}

// 3. (4,4,4) Monte Carlo at n = 4000, N = 40000 over three seeds, plus the
//    exact mean at n = 6, 12.  The pooled mean must land in the published
//    window and sit within noise-plus-finite-n-bias of the interval top.
Outcome criterion_3() {
  Outcome o;
  GeneratorSet gens = preset_group("triangle:4,4,4").gens;
  WalkConfig config;
  config.n = 4000;
  config.N = 40000;
  double sum = 0.0, var = 0.0;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    config.seed = seed;
    DriftEstimate est = estimate_drift_mc(gens, config);
    sum += est.mean;
    var += est.stderr_ * est.stderr_;
  }
  double mean = sum / 3.0;
  double sigma = std::sqrt(var) / 3.0;
  note(o, mean > 0.12808 && mean < 0.13100, "mean %.6f in [0.12808, 0.13100]", mean);

  const ReferenceInterval* row = find_reference_interval("triangle:4,4,4");
  double ceiling = row->upper + bias_allowance(gens, config.n);
  note(o, mean - 3.0 * sigma < ceiling, "mean - 3 sigma %.6f < %.6f (interval top plus n = %d bias)",
       mean - 3.0 * sigma, ceiling, config.n);

  double e6 = exact_mean_displacement(gens, 6).mean;
  double e12 = exact_mean_displacement(gens, 12).mean;
  note(o, e6 > e12, "exact means decrease: %.6f > %.6f", e6, e12);
  note(o, e12 >= 0.128086, "exact mean at n = 12 stays above 0.128086");
  return o;
}

// 4. Bolza Monte Carlo mean in [1.6907, 1.7000].
Outcome criterion_4() {
  Outcome o;
  GeneratorSet gens = preset_group("bolza").gens;
  WalkConfig config;
  config.n = 2000;
  config.N = 20000;
  config.seed = 1;
  DriftEstimate est = estimate_drift_mc(gens, config);
  note(o, est.mean > 1.6907 && est.mean < 1.7000, "mean %.6f in [1.6907, 1.7000] (stderr %.1e)",
       est.mean, est.stderr_);
  return o;
}

// 5. Bolza and Gutzwiller drifts agree within noise at matched budgets.
Outcome criterion_5() {
  Outcome o;
  WalkConfig config;
  config.n = 2000;
  config.N = 20000;
  config.seed = 1;
  DriftEstimate bolza = estimate_drift_mc(preset_group("bolza").gens, config);
  config.seed = 2;
  DriftEstimate gutz = estimate_drift_mc(preset_group("gutzwiller").gens, config);
  double diff = std::abs(bolza.mean - gutz.mean);
  double limit = 3.0 * std::hypot(bolza.stderr_, gutz.stderr_);
  note(o, diff < limit, "|%.6f - %.6f| = %.2e < %.2e", bolza.mean, gutz.mean, diff, limit);
  return o;
}

// 6. Spectral method: stochastic at t = 0 for every preset, and drift
//    agreement with the interval and with Monte Carlo.
Outcome criterion_6() {
  Outcome o;
  const OperatorGrid grid{1024};

  std::vector<std::string> presets;
  for (const auto& [k, l, m] : reference_triangles())
    presets.push_back("triangle:" + std::to_string(k) + "," + std::to_string(l) + "," +
                      std::to_string(m));
  presets.push_back("bolza");
  presets.push_back("gutzwiller");
  double worst = 0.0;
  for (const std::string& id : presets) {
    GeneratorSet gens = preset_group(id).gens;
    PressureCurve curve = pressure_curve(symmetric_closure(gens), {0.0}, grid);
    worst = std::max(worst, std::abs(curve.samples[0].lambda - 1.0));
  }
  note(o, worst < 1e-12, "lambda(0) = 1 within %.2e across %zu presets", worst,
       presets.size());

  const ReferenceInterval* row = find_reference_interval("triangle:4,4,4");
  DriftEstimate spec444 = spectral_drift(preset_group("triangle:4,4,4").gens, grid.M, 1e-3);
  double dist = 0.0;
  if (spec444.mean < row->lower) dist = row->lower - spec444.mean;
  if (spec444.mean > row->upper) dist = spec444.mean - row->upper;
  note(o, dist < 5e-3, "(4,4,4) spectral %.6f within %.1e of the interval", spec444.mean,
       dist);

  for (const char* id : {"triangle:4,4,4", "triangle:3,7,2", "triangle:5,5,5"}) {
    GeneratorSet gens = preset_group(id).gens;
    DriftEstimate spectral = spectral_drift(gens, grid.M, 1e-3);
    WalkConfig config;
    config.n = 2000;
    config.N = 2000;
    config.seed = 1;
    DriftEstimate mc = estimate_drift_mc(gens, config);
    double gap = std::abs(spectral.mean - mc.mean);
    double limit = 5e-3 + 3.0 * mc.stderr_;
    note(o, gap < limit, "%s spectral vs mc gap %.2e < %.2e", id, gap, limit);
  }
  return o;
}

// 7. Entropy: exact small-n values, subadditivity through n = 10, and the
//    closed-form constants.
Outcome criterion_7() {
  Outcome o;
  GeneratorSet gens = preset_group("triangle:4,4,4").gens;
  std::vector<EntropyBound> bounds = avez_upper_bounds(gens, 10);
  double h1 = bounds[0].h_n;
  double h2 = bounds[1].h_n;
  note(o, std::abs(h1 - std::log(3.0)) < 1e-12, "H_1 = log 3 within %.2e",
       std::abs(h1 - std::log(3.0)));
  note(o, std::abs(h2 / 2.0 - (5.0 / 6.0) * std::log(3.0)) < 1e-12,
       "H_2/2 = (5/6) log 3 within %.2e", std::abs(h2 / 2.0 - (5.0 / 6.0) * std::log(3.0)));

  std::vector<double> H{0.0};
  for (const EntropyBound& b : bounds) H.push_back(b.h_n);
  bool subadditive = true;
  for (int m = 1; m <= 10; ++m)
    for (int n = 1; m + n <= 10; ++n)
      if (H[m + n] > H[m] + H[n] + 1e-9) subadditive = false;
  note(o, subadditive, "subadditivity on all pairs with m + n <= 10");

  double rank4 = closed_form_bound(EntropySource::free_group_rank4).value;
  double z2cubed = closed_form_bound(EntropySource::free_product_Z2cubed).value;
  note(o, std::abs(rank4 - 0.75 * std::log(7.0)) < 1e-15, "rank-4 constant = (3/4) log 7");
  note(o, std::abs(z2cubed - std::log(2.0) / 3.0) < 1e-15, "Z2*Z2*Z2 constant = (1/3) log 2");
  note(o, std::abs(z2cubed - 0.231049) < 1e-6, "(1/3) log 2 = 0.231049 to 6 digits");
  return o;
}

// 8. Dimension pipeline on the published worked examples.
Outcome criterion_8() {
  Outcome o;
  GroupBundle bolza = preset_group("bolza");
  DriftInput octagon_drift;
  octagon_drift.interpretation = DriftInterpretation::external_rigorous;
  octagon_drift.rigorous_lower = 1.690771;
  octagon_drift.provenance = octagon_reference_interval().citation;
  DimensionReport rep = build_report(
      "bolza", bolza.gens, closed_form_bound(EntropySource::free_group_rank4), octagon_drift);
  note(o, std::abs(rep.dim_upper - 0.86317) < 2e-5, "octagon bound %.7f near 0.86317",
       rep.dim_upper);
  note(o, rep.verdict == Verdict::Singular, "octagon verdict Singular");

  EntropyBound z2 = closed_form_bound(EntropySource::free_product_Z2cubed);
  double dim888 = 0.0;
  for (const char* id : {"triangle:8,8,8", "triangle:9,9,9", "triangle:10,10,10"}) {
    GroupBundle bundle = preset_group(id);
    const ReferenceInterval* row = find_reference_interval(id);
    DriftInput drift;
    drift.interpretation = DriftInterpretation::external_rigorous;
    drift.rigorous_lower = row->lower;
    drift.provenance = row->citation;
    DimensionReport r = build_report(id, bundle.gens, z2, drift);
    note(o, r.verdict == Verdict::Singular, "%s dim %.5f -> Singular", id, r.dim_upper);
    if (std::strcmp(id, "triangle:8,8,8") == 0) dim888 = r.dim_upper;
  }
  note(o, std::abs(dim888 - 0.99484) < 1e-5, "(8,8,8) bound %.7f near 0.99484", dim888);

  GroupBundle seven = preset_group("triangle:7,7,7");
  const ReferenceInterval* row7 = find_reference_interval("triangle:7,7,7");
  DriftInput drift7;
  drift7.interpretation = DriftInterpretation::external_rigorous;
  drift7.rigorous_lower = row7->lower;
  DimensionReport r7 = build_report("triangle:7,7,7", seven.gens, z2, drift7);
  note(o, r7.verdict == Verdict::Inconclusive, "(7,7,7) dim %.5f -> Inconclusive",
       r7.dim_upper);
  return o;
}

// 9. Full reference-table harness at N = 1e4 trials per row.
Outcome criterion_9() {
  Outcome o;
  HarnessConfig config;
  config.n = 100000;
  config.N = 10000;
  config.seed = 1;
  HarnessReport report = run_table1_harness(config);
  note(o, report.consistent_count >= 22, "%d of %zu rows consistent", report.consistent_count,
       report.rows.size());
  note(o, report.kkk_strictly_increasing, "(k,k,k) means strictly increasing for k = 4..10");
  return o;
}

// 10. Tessellation SVG: deterministic, well-formed, and tile count equal to
//     the entropy module's distinct-element count at the same radius.
Outcome criterion_10() {
  Outcome o;
  GroupBundle bundle = preset_group("triangle:4,4,4");
  RenderOptions opts;
  opts.radius = 6;
  std::string svg = tessellation_svg(bundle, opts);
  std::string again = tessellation_svg(bundle, opts);
  note(o, svg == again, "deterministic output (%zu bytes)", svg.size());
  note(o,
       svg.rfind("<svg", 0) == 0 && svg.find("</svg>") != std::string::npos &&
           svg.find("nan") == std::string::npos && svg.find("inf") == std::string::npos,
       "well-formed svg");

  int tiles = 0;
  const std::string needle = "class=\"tile\"";
  for (std::size_t pos = svg.find(needle); pos != std::string::npos;
       pos = svg.find(needle, pos + needle.size()))
    ++tiles;
  std::int64_t distinct = distinct_element_count(bundle.gens, 6);
  note(o, tiles == distinct, "%d tiles = %lld distinct elements at radius 6", tiles,
       static_cast<long long>(distinct));
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  int criterion = 0;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::strcmp(argv[i], "--criterion") == 0) criterion = std::atoi(argv[i + 1]);
  if (criterion < 1 || criterion > 10) {
    std::fprintf(stderr, "usage: %s --criterion <1..10>\n", argv[0]);
    return 2;
  }

  const double budgets[] = {5, 30, 120, 120, 240, 300, 60, 1, 1800, 30};
  Outcome (*runners[])() = {criterion_1, criterion_2, criterion_3, criterion_4,
                            criterion_5, criterion_6, criterion_7, criterion_8,
                            criterion_9, criterion_10};

  auto t0 = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = runners[criterion - 1]();
  } catch (const std::exception& e) {
    outcome.pass = false;
    outcome.detail = std::string("exception: ") + e.what();
  }
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  double budget = budgets[criterion - 1];
  bool in_time = seconds < budget;
  bool pass = outcome.pass && in_time;
  std::printf("criterion %d: %s (%s; %.1f s of %.0f s budget%s)\n", criterion,
              pass ? "PASS" : "FAIL", outcome.detail.c_str(), seconds, budget,
              in_time ? "" : ", OVER BUDGET");
  return pass ? 0 : 1;
}
