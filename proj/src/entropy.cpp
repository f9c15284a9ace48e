#include "driftlab/entropy.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace driftlab {

namespace {

const complexd kProbes[2] = {complexd(0.31, 0.17), complexd(-0.05, -0.43)};

// First fingerprint component with magnitude above this picks the sign.
constexpr double kPivotTol = 1e-6;
// Fraction of a cell next to a boundary that triggers neighbor probing.
constexpr double kSnapWindow = 0.3;
// Cell counts beyond this switch a component to the logarithmic encoding
// (leaves int64 headroom for the +-1 neighbor probe).
constexpr double kAbsoluteLimit = 4.0e18;
constexpr double kLogOffset = 4.5e18;

std::array<double, 4> normalized_components(const Isometry& g) {
  complexd a = g.a;
  complexd b = g.b;
  if (g.log_scale != 0.0) {
    double s = std::exp(g.log_scale);
    a *= s;
    b *= s;
  }
  std::array<double, 4> e{a.real(), a.imag(), b.real(), b.imag()};
  for (double x : e) {
    if (std::abs(x) > kPivotTol) {
      if (x < 0)
        for (double& y : e) y = -y;
      break;
    }
  }
  for (double x : e)
    if (!std::isfinite(x)) throw std::runtime_error("element fingerprint overflow");
  return e;
}

// Component value -> position in cell units.  Values small enough that the
// absolute cell index fits an int64 use x/grid directly; larger ones use an
// offset log encoding with relative resolution `grid`, in a disjoint range.
double cell_coordinate(double x, double grid) {
  double r = x / grid;
  if (std::abs(r) < kAbsoluteLimit) return r;
  double sign = x < 0 ? -1.0 : 1.0;
  return sign * (kLogOffset + std::log(std::abs(x)) / grid);
}

bool actions_match(const Isometry& g, const Isometry& h, double tol) {
  for (complexd z : kProbes)
    if (std::abs(apply(g, z) - apply(h, z)) > tol) return false;
  return true;
}

// Finds the stored atom this element belongs to, if any.  A hit on the
// primary key whose probe actions disagree is a genuine quantization
// collision and aborts; a disagreeing hit in a neighboring cell is just a
// distinct element living one cell over and is skipped.
template <class Map, class GetRep>
typename Map::iterator locate_element(Map& atoms, const Isometry& g,
                                      const KeyOptions& opts, ElementKey& primary,
                                      GetRep rep) {
  std::vector<ElementKey> keys = neighbor_keys(g, opts);
  primary = keys.front();
  auto it = atoms.find(primary);
  if (it != atoms.end()) {
    if (!actions_match(g, rep(it->second), opts.audit_tol))
      throw std::runtime_error(
          "quantization collision: distinct group elements share an ElementKey "
          "(grid too coarse for this word length)");
    return it;
  }
  for (std::size_t i = 1; i < keys.size(); ++i) {
    it = atoms.find(keys[i]);
    if (it != atoms.end() && actions_match(g, rep(it->second), opts.audit_tol)) return it;
  }
  return atoms.end();
}

const Isometry& atom_rep(const Atom& a) { return a.representative; }
const Isometry& self_rep(const Isometry& g) { return g; }

void check_step_distribution(const std::vector<LabeledIsometry>& closure,
                             const std::vector<double>& dist) {
  if (closure.empty()) throw std::invalid_argument("convolve_step: empty generating set");
  if (dist.size() != closure.size())
    throw std::invalid_argument("convolve_step: step distribution size mismatch");
  double total = 0.0;
  for (double q : dist) total += q;
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("convolve_step: step distribution must sum to 1");
}

bool uniform_distribution(const std::vector<double>& dist) {
  for (double q : dist)
    if (q != dist[0]) return false;
  return !dist.empty();
}

}  // namespace

ElementKey element_key(const Isometry& g, const KeyOptions& opts) {
  std::array<double, 4> e = normalized_components(g);
  ElementKey k;
  k.flag = g.antiholomorphic;
  for (int i = 0; i < 4; ++i) k.q[i] = std::llround(cell_coordinate(e[i], opts.grid));
  return k;
}

std::vector<ElementKey> neighbor_keys(const Isometry& g, const KeyOptions& opts) {
  std::array<double, 4> e = normalized_components(g);
  std::array<std::int64_t, 4> q{};
  std::array<std::int64_t, 4> alt{};
  for (int i = 0; i < 4; ++i) {
    double r = cell_coordinate(e[i], opts.grid);
    q[i] = std::llround(r);
    double d = r - static_cast<double>(q[i]);
    alt[i] = std::abs(d) > 0.5 - kSnapWindow ? q[i] + (d > 0 ? 1 : -1) : q[i];
  }
  std::vector<ElementKey> keys;
  for (int mask = 0; mask < 16; ++mask) {
    bool redundant = false;
    for (int i = 0; i < 4; ++i)
      if ((mask >> i & 1) && alt[i] == q[i]) redundant = true;
    if (redundant) continue;
    ElementKey k;
    k.flag = g.antiholomorphic;
    for (int i = 0; i < 4; ++i) k.q[i] = (mask >> i & 1) ? alt[i] : q[i];
    keys.push_back(k);
  }
  return keys;
}

ConvolutionDistribution point_mass_at_identity(const KeyOptions& opts) {
  ConvolutionDistribution d;
  d.n = 0;
  Isometry id;
  d.atoms.emplace(element_key(id, opts), Atom{1.0, id});
  return d;
}

ConvolutionDistribution convolve_step(const ConvolutionDistribution& dist,
                                      const std::vector<LabeledIsometry>& closure,
                                      const std::vector<double>& step_distribution,
                                      const KeyOptions& opts) {
  check_step_distribution(closure, step_distribution);
  ConvolutionDistribution out;
  out.n = dist.n + 1;
  for (const auto& [key, atom] : dist.atoms) {
    for (std::size_t j = 0; j < closure.size(); ++j) {
      Isometry g = compose(atom.representative, closure[j].map);
      double p = atom.probability * step_distribution[j];
      ElementKey primary;
      auto it = locate_element(out.atoms, g, opts, primary, atom_rep);
      if (it == out.atoms.end())
        out.atoms.emplace(primary, Atom{p, g});
      else
        it->second.probability += p;
    }
  }
  double total = 0.0;
  for (const auto& [key, atom] : out.atoms) total += atom.probability;
  if (std::abs(total - 1.0) > 1e-12)
    throw std::runtime_error("convolve_step: probability mass not conserved");
  return out;
}

double shannon_entropy(const ConvolutionDistribution& dist) {
  double h = 0.0;
  for (const auto& [key, atom] : dist.atoms) {
    double p = atom.probability;
    if (p > 0.0) h -= p * std::log(p);
  }
  return h;
}

std::vector<EntropyBound> avez_upper_bounds(const GeneratorSet& gens, int n_max,
                                            std::size_t budget, const KeyOptions& opts) {
  if (n_max < 1) throw std::invalid_argument("avez_upper_bounds: n_max must be >= 1");
  if (budget == 0) budget = default_enumeration_budget();
  std::vector<LabeledIsometry> closure = symmetric_closure(gens);
  const std::size_t k = closure.size();

  std::vector<EntropyBound> bounds;
  bounds.reserve(static_cast<std::size_t>(n_max));
  ConvolutionDistribution dist = point_mass_at_identity(opts);
  std::size_t updates = 0;
  for (int n = 1; n <= n_max; ++n) {
    updates += dist.atoms.size() * k;
    if (updates > budget)
      throw std::length_error("avez_upper_bounds: atom-update budget exceeded at n = " +
                              std::to_string(n));
    dist = convolve_step(dist, closure, gens.step_distribution, opts);
    EntropyBound b;
    b.h_n = shannon_entropy(dist);
    b.value = b.h_n / n;
    b.n = n;
    b.source = EntropySource::enumeration;
    b.atom_count = static_cast<std::int64_t>(dist.atoms.size());
    bounds.push_back(b);
  }
  return bounds;
}

EntropyBound closed_form_bound(EntropySource kind) {
  EntropyBound b;
  b.n = 0;
  b.source = kind;
  switch (kind) {
    case EntropySource::free_group_rank4:
      b.value = 0.75 * std::log(7.0);
      break;
    case EntropySource::free_product_Z2cubed:
      b.value = std::log(2.0) / 3.0;
      break;
    default:
      throw std::invalid_argument("closed_form_bound: not a closed-form source");
  }
  b.h_n = b.value;
  return b;
}

bool closed_form_applicable(EntropySource kind, const GeneratorSet& gens) {
  if (!uniform_distribution(gens.step_distribution)) return false;
  switch (kind) {
    case EntropySource::free_group_rank4: {
      if (gens.generators.size() != 4) return false;
      for (const Generator& g : gens.generators)
        if (g.is_involution) return false;
      return true;
    }
    case EntropySource::free_product_Z2cubed: {
      if (gens.generators.size() != 3) return false;
      for (const Generator& g : gens.generators)
        if (!g.is_involution) return false;
      return true;
    }
    default:
      return false;
  }
}

std::string closed_form_applicability_note(EntropySource kind) {
  switch (kind) {
    case EntropySource::free_group_rank4:
      return "groups generated by four non-involutive elements and their inverses, "
             "uniform step distribution";
    case EntropySource::free_product_Z2cubed:
      return "groups generated by three involutions, uniform step distribution";
    default:
      return "exact enumeration of this group's convolution powers";
  }
}

std::vector<Isometry> distinct_ball_representatives(const GeneratorSet& gens, int radius,
                                                    std::size_t budget,
                                                    const KeyOptions& opts) {
  if (radius < 0)
    throw std::invalid_argument("distinct_ball_representatives: radius must be >= 0");
  if (budget == 0) budget = default_enumeration_budget();
  std::vector<LabeledIsometry> closure = symmetric_closure(gens);
  const std::size_t k = closure.size();

  std::map<ElementKey, Isometry> seen;
  std::vector<Isometry> reps;
  Isometry id;
  seen.emplace(element_key(id, opts), id);
  reps.push_back(id);
  std::vector<Isometry> frontier{id};

  std::size_t updates = 0;
  for (int layer = 1; layer <= radius && !frontier.empty(); ++layer) {
    updates += frontier.size() * k;
    if (updates > budget)
      throw std::length_error("distinct_ball_representatives: enumeration budget exceeded");
    std::vector<Isometry> next;
    for (const Isometry& f : frontier) {
      for (const LabeledIsometry& s : closure) {
        Isometry g = compose(f, s.map);
        ElementKey primary;
        auto it = locate_element(seen, g, opts, primary, self_rep);
        if (it == seen.end()) {
          seen.emplace(primary, g);
          reps.push_back(g);
          next.push_back(g);
        }
      }
    }
    frontier = std::move(next);
  }
  return reps;
}

std::int64_t distinct_element_count(const GeneratorSet& gens, int radius,
                                    std::size_t budget, const KeyOptions& opts) {
  return static_cast<std::int64_t>(distinct_ball_representatives(gens, radius, budget, opts).size());
}

std::string entropy_csv(const std::vector<EntropyBound>& bounds) {
  std::string out = "n,H_n,H_n_over_n,atom_count\n";
  char line[128];
  for (const EntropyBound& b : bounds) {
    std::snprintf(line, sizeof line, "%d,%.17g,%.17g,%lld\n", b.n, b.h_n, b.value,
                  static_cast<long long>(b.atom_count));
    out += line;
  }
  return out;
}

std::string entropy_source_name(EntropySource s) {
  switch (s) {
    case EntropySource::enumeration:
      return "enumeration";
    case EntropySource::free_group_rank4:
      return "free_group_rank4";
    case EntropySource::free_product_Z2cubed:
      return "free_product_Z2cubed";
    case EntropySource::external:
      return "external";
  }
  return "unknown";
}

}  // namespace driftlab
