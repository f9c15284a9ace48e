#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "driftlab/config.hpp"
#include "driftlab/dimension.hpp"
#include "driftlab/entropy.hpp"
#include "driftlab/groups.hpp"
#include "driftlab/render.hpp"
#include "driftlab/results.hpp"
#include "driftlab/spectral.hpp"
#include "driftlab/table1.hpp"
#include "driftlab/version.hpp"
#include "driftlab/walker.hpp"

namespace {

using namespace driftlab;
using nlohmann::json;

// Error routing: usage/configuration mistakes exit 2, computation failures
// exit 1; with --json the error also lands on stdout as a JSON object.
bool g_json_errors = false;
std::chrono::steady_clock::time_point g_start;

double seconds_since_start() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - g_start).count();
}

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file '" + cfg.out + "'");
  f << text;
  if (!f) throw std::runtime_error("short write to '" + cfg.out + "'");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file '" + path + "'");
  f << text;
  if (!f) throw std::runtime_error("short write to '" + path + "'");
}

// Persist (when requested) and print: JSON mode prints the full persisted
// record so stdout and the results store agree byte-for-byte on content.
void finish(const RunConfig& cfg, const std::string& command, const json& payload,
            const std::string& text) {
  ResultRecord record = make_record(command, cfg.group, cfg, payload, seconds_since_start());
  if (!cfg.results_path.empty()) append_results(cfg.results_path, {record});
  if (cfg.json)
    emit(cfg, record_to_json(record).dump(2) + "\n");
  else
    emit(cfg, text);
}

KeyOptions key_options(const RunConfig& cfg) {
  KeyOptions opts;
  opts.grid = cfg.key_grid;
  opts.audit_tol = cfg.key_audit_tol;
  return opts;
}

WalkConfig walk_config(const RunConfig& cfg) {
  WalkConfig wc;
  wc.n = cfg.n;
  if (cfg.N > 1000000000) throw std::invalid_argument("config: N too large for one process");
  wc.N = static_cast<int>(cfg.N);
  wc.seed = cfg.seed;
  wc.threads = cfg.threads;
  return wc;
}

json drift_payload(const DriftEstimate& e) {
  return json{{"mean", e.mean},
              {"stderr", e.stderr_},
              {"n", e.n},
              {"N", e.N},
              {"method", method_name(e.method)}};
}

std::string word_label(const GeneratorSet& gens, const RelatorWord& word) {
  std::string s;
  for (int v : word) {
    if (!s.empty()) s += ' ';
    const Generator& g = gens.generators[static_cast<std::size_t>(std::abs(v)) - 1];
    s += g.label;
    if (v < 0 && !g.is_involution) s += "^-1";
  }
  return s;
}

// ---------------------------------------------------------------------------
// Global flags: defaults < config file < explicit flags.

struct GlobalArgs {
  std::string config_path;
  std::uint64_t seed = 1;
  bool json = false;
  std::string out;
  std::string results;
  int threads = 0;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* out_opt = nullptr;
  CLI::Option* results_opt = nullptr;
  CLI::Option* threads_opt = nullptr;

  RunConfig materialize() const {
    RunConfig cfg;
    if (!config_path.empty()) cfg = parse_config_file(config_path);
    if (seed_opt->count()) cfg.seed = seed;
    if (json) cfg.json = true;
    if (out_opt->count()) cfg.out = out;
    if (results_opt->count()) cfg.results_path = results;
    if (threads_opt->count()) cfg.threads = threads;
    g_json_errors = cfg.json;
    return cfg;
  }
};

void add_global_flags(CLI::App& app, GlobalArgs& g) {
  app.add_option("--config", g.config_path, "key = value parameter file");
  g.seed_opt = app.add_option("--seed", g.seed, "random-walk seed");
  app.add_flag("--json", g.json, "machine-readable output");
  g.out_opt = app.add_option("--out", g.out, "write output to this file instead of stdout");
  g.results_opt =
      app.add_option("--results", g.results, "append a run record to this JSON-lines store");
  g.threads_opt = app.add_option("--threads", g.threads, "worker threads (0 = all cores)");
}

// ---------------------------------------------------------------------------
// group show

void run_group_show(const RunConfig& cfg) {
  GroupBundle bundle = preset_group(cfg.group);
  const GeneratorSet& gens = bundle.gens;
  RelatorReport report = verify_relators(gens, 1e-9);
  std::vector<LabeledIsometry> closure = symmetric_closure(gens);

  std::ostringstream text;
  text << "group        " << cfg.group << "\n";
  text << "generators   " << gens.generators.size() << " (closure size " << closure.size()
       << ")\n";
  json jgens = json::array();
  for (const Generator& g : gens.generators) {
    char line[256];
    std::snprintf(line, sizeof line,
                  "  %-4s a = %+.12f%+.12fi  b = %+.12f%+.12fi  %s%s\n", g.label.c_str(),
                  g.map.a.real(), g.map.a.imag(), g.map.b.real(), g.map.b.imag(),
                  g.map.antiholomorphic ? "antiholomorphic" : "holomorphic",
                  g.is_involution ? ", involution" : "");
    text << line;
    jgens.push_back({{"label", g.label},
                     {"a_re", g.map.a.real()},
                     {"a_im", g.map.a.imag()},
                     {"b_re", g.map.b.real()},
                     {"b_im", g.map.b.imag()},
                     {"antiholomorphic", g.map.antiholomorphic},
                     {"involution", g.is_involution}});
  }
  text << "polygon      " << bundle.polygon.vertices.size() << " vertices\n";
  json jrels = json::array();
  for (const RelatorCheck& c : report.checks) {
    char line[256];
    std::snprintf(line, sizeof line, "  relator %-24s deviation %.3e  %s\n",
                  word_label(gens, c.word).c_str(), c.deviation, c.pass ? "pass" : "FAIL");
    text << line;
    jrels.push_back({{"word", word_label(gens, c.word)},
                     {"deviation", c.deviation},
                     {"pass", c.pass}});
  }
  text << "relators     " << (report.all_pass ? "all pass" : "FAILURES") << " at tol 1e-09\n";
  if (bundle.tiling_warning) text << "warning      vertex-cycle angle sum check failed\n";
  if (!bundle.notes.empty()) text << "notes        " << bundle.notes << "\n";

  json payload{{"generators", jgens},
               {"closure_size", closure.size()},
               {"relators", jrels},
               {"all_relators_pass", report.all_pass},
               {"polygon_vertices", bundle.polygon.vertices.size()},
               {"tiling_warning", bundle.tiling_warning},
               {"notes", bundle.notes}};
  finish(cfg, "group-show", payload, text.str());
}

// ---------------------------------------------------------------------------
// drift

void run_drift(const RunConfig& cfg, const std::string& curve_path) {
  GroupBundle bundle = preset_group(cfg.group);
  DriftEstimate est;
  json extra = json::object();
  std::string curve_csv;
  if (cfg.method == "mc") {
    est = estimate_drift_mc(bundle.gens, walk_config(cfg));
  } else if (cfg.method == "exact") {
    est = exact_mean_displacement(bundle.gens, cfg.n,
                                  cfg.budget ? static_cast<std::size_t>(cfg.budget) : 0);
  } else if (cfg.method == "spectral") {
    OperatorGrid grid{cfg.spectral_M};
    const double h = cfg.spectral_h;
    std::vector<LabeledIsometry> closure = symmetric_closure(bundle.gens);
    PressureCurve curve =
        pressure_curve(closure, {-2.0 * h, -h, 0.0, h, 2.0 * h}, grid);
    est = drift_from_pressure(curve);
    extra["M"] = cfg.spectral_M;
    extra["h"] = h;
    curve_csv = pressure_csv(curve);
    if (!curve_path.empty()) write_file(curve_path, curve_csv);
  } else {
    throw std::invalid_argument("config: method must be mc, exact or spectral");
  }

  std::ostringstream text;
  text << "group    " << cfg.group << "\n";
  text << "method   " << method_name(est.method) << "\n";
  text << "n        " << est.n << "\n";
  if (cfg.method == "mc") text << "N        " << est.N << "\n";
  if (cfg.method == "spectral")
    text << "M        " << cfg.spectral_M << "\nh        " << g17(cfg.spectral_h) << "\n";
  text << "mean     " << g17(est.mean) << "\n";
  text << "stderr   " << g17(est.stderr_) << "\n";

  json payload = drift_payload(est);
  for (auto& [k, v] : extra.items()) payload[k] = v;
  if (!curve_csv.empty()) payload["curve_rows"] = 5;
  finish(cfg, "drift-" + cfg.method, payload, text.str());
}

// ---------------------------------------------------------------------------
// entropy

void run_entropy(const RunConfig& cfg, const std::string& csv_path) {
  GroupBundle bundle = preset_group(cfg.group);
  std::vector<EntropyBound> bounds =
      avez_upper_bounds(bundle.gens, cfg.entropy_n_max,
                        cfg.budget ? static_cast<std::size_t>(cfg.budget) : 0,
                        key_options(cfg));
  const EntropyBound* best = &bounds.front();
  for (const EntropyBound& b : bounds)
    if (b.value < best->value) best = &b;

  std::ostringstream text;
  text << "group    " << cfg.group << "\n";
  text << "  n      atoms                  H_n                H_n/n\n";
  for (const EntropyBound& b : bounds) {
    char line[160];
    std::snprintf(line, sizeof line, "%3d %10lld %20.17f %20.17f\n", b.n,
                  static_cast<long long>(b.atom_count), b.h_n, b.value);
    text << line;
  }
  text << "best     H_" << best->n << "/" << best->n << " = " << g17(best->value) << " ("
       << entropy_source_name(best->source) << ")\n";

  if (!csv_path.empty()) write_file(csv_path, entropy_csv(bounds));

  json jbounds = json::array();
  for (const EntropyBound& b : bounds)
    jbounds.push_back({{"n", b.n},
                       {"atoms", b.atom_count},
                       {"H_n", b.h_n},
                       {"H_n_over_n", b.value}});
  json payload{{"bounds", jbounds},
               {"best", {{"n", best->n}, {"value", best->value}}},
               {"source", entropy_source_name(best->source)}};
  finish(cfg, "entropy", payload, text.str());
}

// ---------------------------------------------------------------------------
// dimension

void run_dimension(const RunConfig& cfg, const std::string& entropy_source,
                   const std::string& drift_source, const std::string& entropy_provenance,
                   const std::string& drift_provenance) {
  GroupBundle bundle = preset_group(cfg.group);
  EntropyBound entropy =
      resolve_entropy_source(bundle.gens, entropy_source, entropy_provenance, cfg);
  DriftInput drift = resolve_drift_source(bundle.gens, drift_source, drift_provenance, cfg);
  DimensionReport report = build_report(cfg.group, bundle.gens, entropy, drift);

  json jdrift{{"interpretation", drift.interpretation == DriftInterpretation::statistical
                                     ? "statistical"
                                     : "external_rigorous"},
              {"provenance", report.drift_input.provenance}};
  if (drift.interpretation == DriftInterpretation::statistical)
    jdrift["estimate"] = drift_payload(report.drift_input.estimate);
  else
    jdrift["rigorous_lower"] = report.drift_input.rigorous_lower;

  json payload{{"entropy",
                {{"value", report.entropy_bound.value},
                 {"n", report.entropy_bound.n},
                 {"source", entropy_source_name(report.entropy_bound.source)},
                 {"provenance", report.entropy_bound.provenance}}},
               {"drift", jdrift},
               {"effective_drift_lower", report.effective_drift_lower},
               {"dim_upper", report.dim_upper},
               {"verdict", verdict_label(report)},
               {"confidence_note", report.confidence_note}};
  finish(cfg, "dimension", payload, report_text(report));
}

// ---------------------------------------------------------------------------
// table1

void run_table1(const RunConfig& cfg) {
  HarnessConfig hc;
  hc.n = cfg.n;
  if (cfg.N > 100000000) throw std::invalid_argument("config: N too large for one process");
  hc.N = static_cast<int>(cfg.N);
  hc.seed = cfg.seed;
  hc.threads = cfg.threads;

  const bool progressive = !cfg.json && cfg.out.empty();
  if (progressive) {
    std::cout << harness_header();
    hc.on_row = [](const HarnessRow& row) {
      std::cout << harness_row_text(row);
      std::cout.flush();
    };
  }
  HarnessReport report = run_table1_harness(hc);

  std::string text = harness_text(report);
  if (progressive) {
    // Rows already streamed; print only the two summary lines.
    std::size_t cut = text.find("consistent:");
    text = cut == std::string::npos ? text : text.substr(cut);
  }

  json rows = json::array();
  for (const HarnessRow& r : report.rows)
    rows.push_back({{"group", r.reference.group_id},
                    {"k", r.reference.k},
                    {"l", r.reference.l},
                    {"m", r.reference.m},
                    {"ref_lower", r.reference.lower},
                    {"ref_upper", r.reference.upper},
                    {"mean", r.estimate.mean},
                    {"stderr", r.estimate.stderr_},
                    {"allowance", r.allowance},
                    {"status", row_status_name(r.status)}});
  json payload{{"rows", rows},
               {"consistent", report.consistent_count},
               {"rows_total", report.rows.size()},
               {"kkk_means", report.kkk_means},
               {"kkk_strictly_increasing", report.kkk_strictly_increasing}};
  finish(cfg, "table1", payload, text);
}

// ---------------------------------------------------------------------------
// render

std::vector<int> parse_word(const GeneratorSet& gens, const std::string& word) {
  std::vector<int> closure_indices;
  std::stringstream ss(word);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size() || v == 0 ||
        std::abs(v) > static_cast<int>(gens.generators.size()))
      throw std::invalid_argument("render: bad word entry '" + item +
                                  "' (want signed generator indices like 1,2,-1,3)");
    closure_indices.push_back(closure_index(gens, v));
  }
  if (closure_indices.empty()) throw std::invalid_argument("render: empty word");
  return closure_indices;
}

void run_render(const RunConfig& cfg, const std::string& kind, const std::string& word,
                int bins) {
  GroupBundle bundle = preset_group(cfg.group);
  RenderOptions opts;
  opts.canvas_size = cfg.canvas_size;
  opts.stroke_width = cfg.stroke_width;
  opts.radius = cfg.render_radius;
  opts.budget = cfg.budget ? static_cast<std::size_t>(cfg.budget) : 0;
  opts.keys = key_options(cfg);

  if (cfg.json && cfg.out.empty())
    throw std::invalid_argument("render: --json needs --out <file> to hold the image");

  std::string svg;
  json payload{{"kind", kind}};
  if (kind == "tessellation") {
    svg = tessellation_svg(bundle, opts);
    payload["radius"] = cfg.render_radius;
    payload["tiles"] = distinct_element_count(bundle.gens, cfg.render_radius, opts.budget,
                                              opts.keys);
  } else if (kind == "orbit") {
    std::vector<int> indices = word.empty()
                                   ? sample_walk_indices(bundle.gens, cfg.n, cfg.seed)
                                   : parse_word(bundle.gens, word);
    svg = orbit_svg(bundle, indices, complexd{0.0, 0.0}, opts);
    payload["steps"] = indices.size();
  } else if (kind == "measure") {
    BoundarySample sample = sample_harmonic_measure(
        bundle.gens, cfg.n, static_cast<int>(cfg.N), cfg.seed);
    svg = measure_svg(sample, bins, opts);
    payload["bins"] = bins;
    payload["n"] = sample.n;
    payload["converged_fraction"] = sample.converged_fraction;
    payload["warning"] = sample.warning;
    if (sample.warning)
      std::cerr << "warning: only " << 100.0 * sample.converged_fraction
                << "% of endpoints reached the boundary shell; increase n\n";
  } else {
    throw std::invalid_argument("render: kind must be tessellation, orbit or measure");
  }
  payload["bytes"] = svg.size();

  if (cfg.json) {
    write_file(cfg.out, svg);
    RunConfig stdout_cfg = cfg;
    stdout_cfg.out.clear();
    payload["path"] = cfg.out;
    finish(stdout_cfg, "render-" + kind, payload, svg);
  } else {
    finish(cfg, "render-" + kind, payload, svg);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperbolic random-walk drift, entropy and dimension toolkit"};
  app.set_version_flag("--version", std::string(kProjectVersion) + " (" + kBuildId + ")");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalArgs g;
  add_global_flags(app, g);

  // group show <id>
  CLI::App* group_cmd = app.add_subcommand("group", "inspect a group preset");
  group_cmd->fallthrough();
  group_cmd->require_subcommand(1);
  CLI::App* show_cmd = group_cmd->add_subcommand(
      "show", "print generators, polygon and relator checks");
  show_cmd->fallthrough();
  std::string show_group;
  show_cmd->add_option("group", show_group, "bolza | gutzwiller | triangle:k,l,m")->required();
  show_cmd->callback([&] {
    RunConfig cfg = g.materialize();
    cfg.group = show_group;
    validate_config(cfg);
    run_group_show(cfg);
  });

  // drift <method> <id>
  CLI::App* drift_cmd =
      app.add_subcommand("drift", "estimate the random-walk drift (speed)");
  drift_cmd->fallthrough();
  std::string drift_method, drift_group, drift_curve;
  int drift_n = 0, drift_M = 0;
  std::int64_t drift_N = 0;
  double drift_h = 0.0;
  std::uint64_t drift_budget = 0;
  drift_cmd->add_option("method", drift_method, "mc | exact | spectral")
      ->required()
      ->check(CLI::IsMember({"mc", "exact", "spectral"}));
  drift_cmd->add_option("group", drift_group, "group preset id")->required();
  CLI::Option* drift_n_opt = drift_cmd->add_option("--n", drift_n, "walk length");
  CLI::Option* drift_N_opt = drift_cmd->add_option("--N", drift_N, "Monte Carlo trials");
  CLI::Option* drift_M_opt =
      drift_cmd->add_option("--M", drift_M, "boundary grid size (power of two >= 64)");
  CLI::Option* drift_h_opt =
      drift_cmd->add_option("--step", drift_h, "pressure-derivative step");
  CLI::Option* drift_budget_opt =
      drift_cmd->add_option("--budget", drift_budget, "enumeration budget (exact method)");
  drift_cmd->add_option("--curve", drift_curve,
                        "write the sampled pressure curve as CSV to this file (spectral)");
  drift_cmd->callback([&] {
    RunConfig cfg = g.materialize();
    cfg.method = drift_method;
    cfg.group = drift_group;
    if (drift_n_opt->count()) cfg.n = drift_n;
    if (drift_N_opt->count()) cfg.N = drift_N;
    if (drift_M_opt->count()) cfg.spectral_M = drift_M;
    if (drift_h_opt->count()) cfg.spectral_h = drift_h;
    if (drift_budget_opt->count()) cfg.budget = drift_budget;
    validate_config(cfg);
    run_drift(cfg, drift_curve);
  });

  // entropy <id>
  CLI::App* entropy_cmd =
      app.add_subcommand("entropy", "Avez entropy upper bounds H_n/n by convolution");
  entropy_cmd->fallthrough();
  std::string entropy_group, entropy_csv_path;
  int entropy_n_max = 0;
  std::uint64_t entropy_budget = 0;
  double entropy_grid = 0.0, entropy_audit = 0.0;
  entropy_cmd->add_option("group", entropy_group, "group preset id")->required();
  CLI::Option* entropy_n_opt =
      entropy_cmd->add_option("--n-max", entropy_n_max, "largest convolution power");
  CLI::Option* entropy_budget_opt =
      entropy_cmd->add_option("--budget", entropy_budget, "atom-update budget");
  CLI::Option* entropy_grid_opt =
      entropy_cmd->add_option("--grid", entropy_grid, "element-identification cell width");
  CLI::Option* entropy_audit_opt =
      entropy_cmd->add_option("--audit-tol", entropy_audit, "merge audit tolerance");
  entropy_cmd->add_option("--csv", entropy_csv_path, "write the table as CSV to this file");
  entropy_cmd->callback([&] {
    RunConfig cfg = g.materialize();
    cfg.group = entropy_group;
    if (entropy_n_opt->count()) cfg.entropy_n_max = entropy_n_max;
    if (entropy_budget_opt->count()) cfg.budget = entropy_budget;
    if (entropy_grid_opt->count()) cfg.key_grid = entropy_grid;
    if (entropy_audit_opt->count()) cfg.key_audit_tol = entropy_audit;
    validate_config(cfg);
    run_entropy(cfg, entropy_csv_path);
  });

  // dimension <id> --entropy <source> --drift <source>
  CLI::App* dim_cmd = app.add_subcommand(
      "dimension", "harmonic-measure dimension upper bound and singularity verdict");
  dim_cmd->fallthrough();
  std::string dim_group, dim_entropy, dim_drift, dim_eprov, dim_dprov;
  int dim_n = 0, dim_M = 0, dim_nmax = 0;
  std::int64_t dim_N = 0;
  dim_cmd->add_option("group", dim_group, "group preset id")->required();
  dim_cmd
      ->add_option("--entropy", dim_entropy,
                   "enumeration | free_group_rank4 | free_product_Z2cubed | <number>")
      ->required();
  dim_cmd
      ->add_option("--drift", dim_drift, "mc | exact | spectral | reference | <number>")
      ->required();
  dim_cmd->add_option("--entropy-provenance", dim_eprov,
                      "where a numeric entropy bound comes from");
  dim_cmd->add_option("--drift-provenance", dim_dprov,
                      "where a numeric drift bound comes from");
  CLI::Option* dim_n_opt = dim_cmd->add_option("--n", dim_n, "walk length");
  CLI::Option* dim_N_opt = dim_cmd->add_option("--N", dim_N, "Monte Carlo trials");
  CLI::Option* dim_M_opt = dim_cmd->add_option("--M", dim_M, "spectral grid size");
  CLI::Option* dim_nmax_opt =
      dim_cmd->add_option("--n-max", dim_nmax, "largest convolution power");
  dim_cmd->callback([&] {
    RunConfig cfg = g.materialize();
    cfg.group = dim_group;
    if (dim_n_opt->count()) cfg.n = dim_n;
    if (dim_N_opt->count()) cfg.N = dim_N;
    if (dim_M_opt->count()) cfg.spectral_M = dim_M;
    if (dim_nmax_opt->count()) cfg.entropy_n_max = dim_nmax;
    validate_config(cfg);
    run_dimension(cfg, dim_entropy, dim_drift, dim_eprov, dim_dprov);
  });

  // table1
  CLI::App* table_cmd = app.add_subcommand(
      "table1", "compare Monte Carlo drift against the certified reference intervals");
  table_cmd->fallthrough();
  int table_n = 0;
  std::int64_t table_budget = 0;
  CLI::Option* table_n_opt = table_cmd->add_option("--n", table_n, "walk length per row");
  CLI::Option* table_budget_opt =
      table_cmd->add_option("--N", table_budget, "Monte Carlo trials per row");
  table_cmd->callback([&] {
    RunConfig cfg = g.materialize();
    cfg.group = "table1";
    cfg.n = table_n_opt->count() ? table_n : 100000;
    cfg.N = table_budget_opt->count() ? table_budget : 10000;
    if (cfg.n <= 0 || cfg.N <= 0)
      throw std::invalid_argument("table1: --n and --N must be positive");
    run_table1(cfg);
  });

  // render <kind> <id>
  CLI::App* render_cmd = app.add_subcommand("render", "SVG pictures of the action");
  render_cmd->fallthrough();
  std::string render_kind, render_group, render_word;
  int render_radius = 0, render_bins = 256, render_canvas = 0, render_n = 0;
  std::int64_t render_N = 0;
  double render_stroke = 0.0;
  render_cmd->add_option("kind", render_kind, "tessellation | orbit | measure")
      ->required()
      ->check(CLI::IsMember({"tessellation", "orbit", "measure"}));
  render_cmd->add_option("group", render_group, "group preset id")->required();
  CLI::Option* render_radius_opt =
      render_cmd->add_option("--radius", render_radius, "word-ball radius (tessellation)");
  render_cmd->add_option("--word", render_word,
                         "orbit word as signed generator indices, e.g. 1,2,1,3");
  render_cmd->add_option("--bins", render_bins, "histogram bins (measure)");
  CLI::Option* render_n_opt =
      render_cmd->add_option("--n", render_n, "walk length (orbit: random-word length)");
  CLI::Option* render_N_opt = render_cmd->add_option("--N", render_N, "walks (measure)");
  CLI::Option* render_canvas_opt =
      render_cmd->add_option("--canvas", render_canvas, "image width/height in pixels");
  CLI::Option* render_stroke_opt =
      render_cmd->add_option("--stroke", render_stroke, "stroke width in disk units");
  render_cmd->callback([&] {
    RunConfig cfg = g.materialize();
    cfg.group = render_group;
    if (render_radius_opt->count()) cfg.render_radius = render_radius;
    if (render_n_opt->count())
      cfg.n = render_n;
    else if (render_kind == "orbit")
      cfg.n = 12;
    if (render_N_opt->count()) cfg.N = render_N;
    if (render_canvas_opt->count()) cfg.canvas_size = render_canvas;
    if (render_stroke_opt->count()) cfg.stroke_width = render_stroke;
    if (render_bins <= 0) throw std::invalid_argument("render: --bins must be positive");
    validate_config(cfg);
    run_render(cfg, render_kind, render_word, render_bins);
  });

  g_start = std::chrono::steady_clock::now();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    if (g_json_errors) std::cout << json{{"error", e.what()}}.dump() << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    if (g_json_errors) std::cout << json{{"error", e.what()}}.dump() << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
