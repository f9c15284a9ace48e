#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "driftlab/groups.hpp"

namespace driftlab {

// Identification key for group elements: the antiholomorphic flag plus the
// matrix entries a, b of the determinant-normalized representative (the
// second row is determined by conjugation), sign-normalized and quantized.
// Sign normalization resolves the projective +-I ambiguity: the first
// component of (Re a, Im a, Re b, Im b) with magnitude > 1e-6 is made
// positive.  Components quantize to an absolute grid of width `grid`;
// components too large for that to fit an int64 fall back to a logarithmic
// encoding with relative resolution `grid`.
struct ElementKey {
  bool flag = false;
  std::array<std::int64_t, 4> q{};
  auto operator<=>(const ElementKey&) const = default;
};

struct KeyOptions {
  double grid = 1e-8;       // quantization cell width
  double audit_tol = 1e-6;  // probe-point agreement required on key merges
};

ElementKey element_key(const Isometry& g, const KeyOptions& opts = {});

// A component landing near a quantization-cell boundary may round either
// way between two floating representatives of the same element.
// neighbor_keys lists every key the element could legitimately quantize to
// (primary key first); lookups consult all of them before allocating a
// fresh atom.
std::vector<ElementKey> neighbor_keys(const Isometry& g, const KeyOptions& opts = {});

struct Atom {
  double probability = 0.0;
  Isometry representative;
};

// n-step distribution of the walk on the group: the atoms of the n-fold
// convolution of the step distribution, identified by ElementKey.
// Probabilities are all positive and sum to 1 within 1e-12.
struct ConvolutionDistribution {
  std::map<ElementKey, Atom> atoms;
  int n = 0;
};

ConvolutionDistribution point_mass_at_identity(const KeyOptions& opts = {});

// One convolution step: for each atom (e, p) and each closure element g
// with step probability q, accumulate p*q on key(e*g).  Every merge is
// audited by comparing the actions of the incoming and stored
// representatives on two fixed probe points to audit_tol; a primary-key
// collision with mismatched actions aborts with std::runtime_error (the
// quantization grid is too coarse for this depth).
ConvolutionDistribution convolve_step(const ConvolutionDistribution& dist,
                                      const std::vector<LabeledIsometry>& closure,
                                      const std::vector<double>& step_distribution,
                                      const KeyOptions& opts = {});

// Shannon entropy -sum p log p in nats.
double shannon_entropy(const ConvolutionDistribution& dist);

enum class EntropySource { enumeration, free_group_rank4, free_product_Z2cubed, external };

struct EntropyBound {
  double value = 0.0;  // upper bound on the Avez entropy, nats (H_n / n)
  double h_n = 0.0;    // raw Shannon entropy H(nu^{*n}); equals value for closed forms
  int n = 0;           // 0 for closed forms and external values
  EntropySource source = EntropySource::enumeration;
  std::int64_t atom_count = 0;
  std::string provenance;  // external values: where the number comes from
};

// H(nu^{*n})/n for n = 1..n_max; each term upper-bounds the Avez entropy
// (H_n is subadditive, so the limit is inf H_n/n).  budget caps the total
// atom-updates across steps; 0 means default_enumeration_budget().
std::vector<EntropyBound> avez_upper_bounds(const GeneratorSet& gens, int n_max,
                                            std::size_t budget = 0,
                                            const KeyOptions& opts = {});

// Closed-form entropy constants usable as upper bounds:
//   free_group_rank4     : (3/4) log 7, the walk on the free group of rank 4;
//     applicable to any group generated by 4 elements and their inverses.
//   free_product_Z2cubed : (1/3) log 2, the walk on Z2 * Z2 * Z2;
//     applicable to any group generated by 3 involutions.
// Both transfer through quotient maps, which never increase entropy.
EntropyBound closed_form_bound(EntropySource kind);
bool closed_form_applicable(EntropySource kind, const GeneratorSet& gens);
std::string closed_form_applicability_note(EntropySource kind);

// One representative per distinct group element among words of length
// <= radius, in discovery order (identity first, then by word length).
std::vector<Isometry> distinct_ball_representatives(const GeneratorSet& gens, int radius,
                                                    std::size_t budget = 0,
                                                    const KeyOptions& opts = {});

std::int64_t distinct_element_count(const GeneratorSet& gens, int radius,
                                    std::size_t budget = 0,
                                    const KeyOptions& opts = {});

// CSV rows "n,H_n,H_n_over_n,atom_count".
std::string entropy_csv(const std::vector<EntropyBound>& bounds);

std::string entropy_source_name(EntropySource s);

}  // namespace driftlab
