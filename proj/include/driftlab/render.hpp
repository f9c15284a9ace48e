#pragma once

#include <string>
#include <vector>

#include "driftlab/entropy.hpp"
#include "driftlab/groups.hpp"
#include "driftlab/walker.hpp"

namespace driftlab {

struct RenderOptions {
  int canvas_size = 800;         // width/height attribute, pixels
  double stroke_width = 0.0035;  // disk units (the viewBox is in disk units)
  int radius = 4;                // tessellation word-ball radius
  std::size_t budget = 0;        // enumeration budget; 0 = library default
  KeyOptions keys;               // element identification for tile dedup
};

// One SVG path arc segment between two disk points; the geodesic through
// them is either a diameter chunk (straight line) or a minor arc of the
// disk-orthogonal circle.  Coordinates are SVG user units: x as-is, y
// negated (SVG y grows downward).
struct ArcCommand {
  bool line = false;
  double radius = 0.0;
  int large_arc = 0;  // always 0: a geodesic arc inside the disk is minor
  int sweep = 0;
  complexd from, to;  // SVG coordinates
};

ArcCommand arc_between(complexd p, complexd q);

// Images of the fundamental polygon under every distinct element of the
// word ball (deduplicated exactly like the entropy module), as true
// circular arcs.  radius 0 draws just the polygon.
std::string tessellation_svg(const GroupBundle& bundle, const RenderOptions& opts);

// Walk orbit: base point and its successive images under the left-to-right
// prefix products of the given closure-index word, drawn as a polyline with
// numbered markers.
std::string orbit_svg(const GroupBundle& bundle, const std::vector<int>& closure_indices,
                      complexd base, const RenderOptions& opts);

// Boundary-sample histogram (equal-width bins over the full circle) drawn
// as a radial rose outside the disk.
std::string measure_svg(const BoundarySample& sample, int bins, const RenderOptions& opts);

}  // namespace driftlab
