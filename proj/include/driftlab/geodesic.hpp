#pragma once

#include <vector>

#include "driftlab/isometry.hpp"

namespace driftlab {

// Geodesics of the disk model: diameters, or circles orthogonal to the
// unit circle (equivalently |center|^2 = radius^2 + 1).
struct GeodesicArc {
  enum class Kind { diameter, circular };
  Kind kind = Kind::diameter;
  double angle = 0.0;   // diameter only: direction angle in [0, pi)
  complexd center{0.0, 0.0};  // circular only
  double radius = 0.0;        // circular only
};

// Geodesic through two distinct interior points.  The circular case solves
// the linear system 2 Re(conj(p) c) = |p|^2 + 1 (and likewise for q) for
// the Euclidean center c; orthogonality gives r^2 = |c|^2 - 1.
// Throws std::invalid_argument when p and q are too close for the system
// to be well posed.
GeodesicArc geodesic_through(complexd p, complexd q);

// Anti-holomorphic involution fixing the geodesic through p and q
// pointwise.  Diameter at angle t: z -> e^{2it} conj(z), encoded as
// (a, b) = (e^{it}, 0) with the flag set.  Circular case: circle inversion
// z -> c + r^2 / conj(z - c), encoded as (a, b) = (i c / r, -i / r).
Isometry reflection_in_geodesic(complexd p, complexd q);

// Unit tangent direction of the arc at an on-arc point (orientation is
// not meaningful; returned as an angle mod pi).
double tangent_angle_at(const GeodesicArc& arc, complexd z);

// Euclidean distance from z to the full geodesic (used by side-matching
// checks; the geodesic arcs of interest are short enough that segment
// clamping is handled by the callers).
double euclidean_distance_to(const GeodesicArc& arc, complexd z);

// Hyperbolic barycenter: the Karcher-mean fixed point, iterated until the
// tangent-space mean at the current iterate has norm below tol.
complexd karcher_mean(const std::vector<complexd>& points, double tol = 1e-14);

}  // namespace driftlab
