#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "driftlab/geodesic.hpp"
#include "driftlab/isometry.hpp"

namespace driftlab {

struct Generator {
  std::string label;
  Isometry map;
  bool is_involution = false;
  int paired_side = -1;  // index into FundamentalPolygon::sides this generator owns
};

// Relator word: signed 1-based generator indices (+i = g_i, -i = g_i^{-1}).
using RelatorWord = std::vector<int>;

struct GeneratorSet {
  std::string id;
  std::vector<Generator> generators;
  // Probability per distinct element of the symmetric closure, in the order
  // symmetric_closure() produces.  Defaults to uniform.
  std::vector<double> step_distribution;
  std::vector<RelatorWord> relators;
};

struct FundamentalPolygon {
  std::vector<complexd> vertices;     // vertex i joins side i-1 and side i
  std::vector<GeodesicArc> sides;     // side i spans vertex i -> vertex i+1
  std::vector<double> angles;         // interior angle at vertex i
};

// Fixed-point-free involution on the eight octagon side indices.
struct PairingScheme {
  std::array<int, 8> permutation;
  bool valid() const;
};

PairingScheme bolza_pairing();       // opposite sides: s -> s + 4 (mod 8)
PairingScheme gutzwiller_pairing();  // alternating sides: (0 2)(1 3)(4 6)(5 7)

struct GroupBundle {
  GeneratorSet gens;
  FundamentalPolygon polygon;
  bool tiling_warning = false;  // vertex-cycle angle sum check failed
  std::string notes;
};

enum class TrianglePlacement { barycenter, vertex };

// Reflection group of the hyperbolic triangle with angles pi/k, pi/l, pi/m.
// Generators are the reflections g1, g2, g3 in sides CA, AB, BC; relators
// are g_i^2 and (g1 g2)^k, (g2 g3)^l, (g3 g1)^m.  Requires
// 1/k + 1/l + 1/m < 1; side lengths come from the hyperbolic law of
// cosines.  Default placement puts the barycenter at 0 with vertex A on
// the positive real axis; vertex placement keeps A itself at 0.
GroupBundle build_triangle_group(int k, int l, int m,
                                 TrianglePlacement placement = TrianglePlacement::barycenter);

// Side-pairing group of the regular octagon with angles pi/4 (circumradius
// arccosh(3 + 2 sqrt(2)), side midpoints on the rays at angles s pi/4).
// One holomorphic translation generator per side pair; a pairing failing
// the vertex-cycle 2pi angle-sum check still returns a bundle, flagged.
GroupBundle build_octagon_group(const PairingScheme& pairing);

struct RelatorCheck {
  RelatorWord word;
  double deviation = 0.0;
  bool antiholomorphic = false;
  bool pass = false;
};

struct RelatorReport {
  std::vector<RelatorCheck> checks;
  bool all_pass = true;
};

RelatorReport verify_relators(const GeneratorSet& gens, double tol);

Isometry evaluate_word(const GeneratorSet& gens, const RelatorWord& word);

struct LabeledIsometry {
  std::string label;
  Isometry map;
};

// Distinct elements of the symmetric generating set: involutions once,
// other generators as the element followed by its inverse.
std::vector<LabeledIsometry> symmetric_closure(const GeneratorSet& gens);

// Position of g_i (+i) or g_i^{-1} (-i, 1-based) within symmetric_closure;
// involutions answer the same index for both signs.
int closure_index(const GeneratorSet& gens, int signed_index);

struct WordEntry {
  std::vector<int> word;  // indices into the symmetric closure
  Isometry map;
};

// All words of length <= radius over the symmetric closure, in
// lexicographic order by (length, indices).  Count is sum_j |closure|^j;
// throws std::length_error when that exceeds the budget.
std::vector<WordEntry> word_ball(const GeneratorSet& gens, int radius,
                                 std::size_t budget = 100000000);

// Enumeration budget shared by word_ball / exact drift / entropy callers;
// overridable through the DRIFTLAB_BUDGET environment variable.
std::size_t default_enumeration_budget();

// Preset lookup: "bolza", "gutzwiller", "triangle:k,l,m".
GroupBundle preset_group(const std::string& id,
                         TrianglePlacement placement = TrianglePlacement::barycenter);
bool is_known_preset(const std::string& id);

// The 23 (k, l, m) triples of the embedded drift reference table.
std::vector<std::array<int, 3>> reference_triangles();

}  // namespace driftlab
