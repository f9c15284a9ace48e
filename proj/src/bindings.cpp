#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "driftlab/config.hpp"
#include "driftlab/dimension.hpp"
#include "driftlab/entropy.hpp"
#include "driftlab/groups.hpp"
#include "driftlab/render.hpp"
#include "driftlab/spectral.hpp"
#include "driftlab/table1.hpp"
#include "driftlab/version.hpp"
#include "driftlab/walker.hpp"

namespace py = pybind11;
using namespace driftlab;

namespace {

py::dict drift_dict(const DriftEstimate& e) {
  py::dict d;
  d["mean"] = e.mean;
  d["stderr"] = e.stderr_;
  d["n"] = e.n;
  d["N"] = e.N;
  d["method"] = method_name(e.method);
  return d;
}

py::dict entropy_dict(const EntropyBound& b) {
  py::dict d;
  d["n"] = b.n;
  d["H_n"] = b.h_n;
  d["H_n_over_n"] = b.value;
  d["atoms"] = b.atom_count;
  d["source"] = entropy_source_name(b.source);
  if (!b.provenance.empty()) d["provenance"] = b.provenance;
  return d;
}

KeyOptions keys_from(double grid, double audit_tol) {
  KeyOptions k;
  k.grid = grid;
  k.audit_tol = audit_tol;
  return k;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Random walks on Fuchsian groups: drift estimation, Avez entropy bounds and "
      "harmonic-measure dimension bounds on the Poincare disk";
  m.attr("__version__") = kProjectVersion;
  m.attr("build_id") = kBuildId;

  py::class_<GroupBundle>(m, "Group", "A generating set with its fundamental polygon")
      .def_property_readonly("id", [](const GroupBundle& b) { return b.gens.id; })
      .def_property_readonly("labels",
                             [](const GroupBundle& b) {
                               std::vector<std::string> out;
                               for (const Generator& g : b.gens.generators)
                                 out.push_back(g.label);
                               return out;
                             })
      .def_property_readonly(
          "closure_size",
          [](const GroupBundle& b) { return symmetric_closure(b.gens).size(); })
      .def_property_readonly("vertices",
                             [](const GroupBundle& b) { return b.polygon.vertices; })
      .def_property_readonly("tiling_warning",
                             [](const GroupBundle& b) { return b.tiling_warning; })
      .def(
          "relators_pass",
          [](const GroupBundle& b, double tol) { return verify_relators(b.gens, tol).all_pass; },
          py::arg("tol") = 1e-9)
      .def("__repr__", [](const GroupBundle& b) {
        return "<Group '" + b.gens.id + "', " + std::to_string(b.gens.generators.size()) +
               " generators>";
      });

  m.def("preset_group", [](const std::string& id) { return preset_group(id); }, py::arg("id"),
        "Build 'bolza', 'gutzwiller' or 'triangle:k,l,m'");

  m.def(
      "drift_mc",
      [](const GroupBundle& b, int n, int N, std::uint64_t seed, int threads) {
        WalkConfig wc;
        wc.n = n;
        wc.N = N;
        wc.seed = seed;
        wc.threads = threads;
        return drift_dict(estimate_drift_mc(b.gens, wc));
      },
      py::arg("group"), py::arg("n") = 1000, py::arg("N") = 1000, py::arg("seed") = 1,
      py::arg("threads") = 0, "Monte Carlo drift estimate (deterministic per seed)");

  m.def(
      "drift_exact",
      [](const GroupBundle& b, int n, std::size_t budget) {
        return drift_dict(exact_mean_displacement(b.gens, n, budget));
      },
      py::arg("group"), py::arg("n"), py::arg("budget") = 0,
      "Exact mean displacement over all length-n words");

  m.def(
      "drift_spectral",
      [](const GroupBundle& b, int M, double h) {
        return drift_dict(spectral_drift(b.gens, M, h));
      },
      py::arg("group"), py::arg("M") = 1024, py::arg("h") = 1e-3,
      "Drift from the pressure derivative of the boundary transfer operator");

  m.def(
      "entropy_bounds",
      [](const GroupBundle& b, int n_max, std::uint64_t budget, double grid,
         double audit_tol) {
        py::list out;
        for (const EntropyBound& bound :
             avez_upper_bounds(b.gens, n_max, static_cast<std::size_t>(budget),
                               keys_from(grid, audit_tol)))
          out.append(entropy_dict(bound));
        return out;
      },
      py::arg("group"), py::arg("n_max") = 8, py::arg("budget") = 0,
      py::arg("grid") = 1e-8, py::arg("audit_tol") = 1e-6,
      "H_n/n for n = 1..n_max by exact convolution enumeration");

  m.def(
      "closed_form_entropy",
      [](const std::string& kind) {
        if (kind == "free_group_rank4")
          return entropy_dict(closed_form_bound(EntropySource::free_group_rank4));
        if (kind == "free_product_Z2cubed")
          return entropy_dict(closed_form_bound(EntropySource::free_product_Z2cubed));
        throw std::invalid_argument(
            "closed_form_entropy: kind must be free_group_rank4 or free_product_Z2cubed");
      },
      py::arg("kind"));

  m.def(
      "distinct_elements",
      [](const GroupBundle& b, int radius, std::uint64_t budget, double grid,
         double audit_tol) {
        return distinct_element_count(b.gens, radius, static_cast<std::size_t>(budget),
                                      keys_from(grid, audit_tol));
      },
      py::arg("group"), py::arg("radius"), py::arg("budget") = 0, py::arg("grid") = 1e-8,
      py::arg("audit_tol") = 1e-6, "Distinct group elements in the word ball");

  m.def(
      "dimension_report",
      [](const GroupBundle& b, const std::string& entropy, const std::string& drift, int n,
         std::int64_t N, std::uint64_t seed, int n_max, int M, double h,
         const std::string& entropy_provenance, const std::string& drift_provenance) {
        RunConfig cfg;
        cfg.group = b.gens.id;
        cfg.n = n;
        cfg.N = N;
        cfg.seed = seed;
        cfg.entropy_n_max = n_max;
        cfg.spectral_M = M;
        cfg.spectral_h = h;
        EntropyBound eb = resolve_entropy_source(b.gens, entropy, entropy_provenance, cfg);
        DriftInput di = resolve_drift_source(b.gens, drift, drift_provenance, cfg);
        DimensionReport rep = build_report(b.gens.id, b.gens, eb, di);
        py::dict d;
        d["group"] = rep.group_id;
        d["entropy"] = entropy_dict(rep.entropy_bound);
        d["effective_drift_lower"] = rep.effective_drift_lower;
        d["dim_upper"] = rep.dim_upper;
        d["verdict"] = verdict_label(rep);
        d["confidence_note"] = rep.confidence_note;
        return d;
      },
      py::arg("group"), py::arg("entropy") = "enumeration", py::arg("drift") = "mc",
      py::arg("n") = 1000, py::arg("N") = 1000, py::arg("seed") = 1, py::arg("n_max") = 8,
      py::arg("M") = 1024, py::arg("h") = 1e-3, py::arg("entropy_provenance") = "",
      py::arg("drift_provenance") = "",
      "Combine an entropy upper bound and a drift lower bound into a dimension verdict");

  m.def("reference_intervals", [] {
    py::list out;
    auto row_dict = [](const ReferenceInterval& r) {
      py::dict d;
      d["group"] = r.group_id;
      d["k"] = r.k;
      d["l"] = r.l;
      d["m"] = r.m;
      d["lower"] = r.lower;
      d["upper"] = r.upper;
      d["citation"] = r.citation;
      return d;
    };
    for (const ReferenceInterval& r : reference_drift_table()) out.append(row_dict(r));
    out.append(row_dict(octagon_reference_interval()));
    return out;
  });

  m.def(
      "sample_measure_angles",
      [](const GroupBundle& b, int n, int N, std::uint64_t seed) {
        return sample_harmonic_measure(b.gens, n, N, seed).angles;
      },
      py::arg("group"), py::arg("n") = 1000, py::arg("N") = 1000, py::arg("seed") = 1,
      "Boundary angles hit by N walks of length n");

  m.def(
      "tessellation_svg",
      [](const GroupBundle& b, int radius) {
        RenderOptions opts;
        opts.radius = radius;
        return tessellation_svg(b, opts);
      },
      py::arg("group"), py::arg("radius") = 4);
}
