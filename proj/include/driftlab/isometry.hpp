#pragma once

#include <complex>
#include <stdexcept>

namespace driftlab {

using complexd = std::complex<double>;

// Boundary point xi = e^{i theta}, theta canonicalized into [0, 2pi).
struct BoundaryPoint {
  double theta = 0.0;
};

double canonical_angle(double theta);

// Isometry of the Poincare disk in determinant-normalized (a, b)-form.
//
// The map is z -> (a z' + b) / (conj(b) z' + conj(a)) with z' = conj(z)
// iff antiholomorphic.  The matrix [[a, b], [conj(b), conj(a)]] satisfies
// |a|^2 - |b|^2 = 1; this shape is closed under products and inverses, so
// holomorphic maps are exactly the SU(1,1)-form Mobius transformations and
// the flag tracks an optional pre-composition with complex conjugation.
//
// log_scale holds an accumulated magnitude factor: the true matrix is
// e^{log_scale} * (a, b).  Long random-walk products grow like e^{d/2}
// where d is the displacement, which overflows doubles near d ~ 1400;
// callers periodically divide out |a| and push the magnitude into
// log_scale instead.  The determinant constraint then reads
// |a|^2 - |b|^2 = e^{-2 log_scale}.
struct Isometry {
  complexd a{1.0, 0.0};
  complexd b{0.0, 0.0};
  bool antiholomorphic = false;
  double log_scale = 0.0;
};

inline Isometry identity_isometry() { return Isometry{}; }

// Composition g o h (apply h first).  Matrix rule: M = M_g * C^{eps_g}(M_h)
// where C conjugates every entry and eps_g is g's flag; flags xor.
// The result is determinant-renormalized when entries are of moderate size,
// otherwise the magnitude is absorbed into log_scale.
Isometry compose(const Isometry& g, const Isometry& h);

Isometry inverse(const Isometry& g);

// Interior action.  Works at any log_scale (the ratio is scale-invariant).
// A function object rather than a free function: unqualified lookup then
// resolves `apply` to this object and suppresses ADL, which would otherwise
// pull std::apply into the candidate set for std::complex arguments (a hard
// substitution error in libstdc++).
struct ApplyFn {
  complexd operator()(const Isometry& g, complexd z) const;
  BoundaryPoint operator()(const Isometry& g, BoundaryPoint xi) const;
};
inline constexpr ApplyFn apply{};

// |g'(xi)| for xi = e^{i theta}: 1 / |conj(b) xi' + conj(a)|^2 with
// xi' = conj(xi) iff antiholomorphic, times e^{-2 log_scale} so that
// unnormalized representations still give the true derivative.
double boundary_derivative(const Isometry& g, BoundaryPoint xi);

// Hyperbolic distance d(g . 0, 0) = 2 arccosh(|a_true|), evaluated as
// 2 (log_scale + log(|a| + |b|)), which is exact because
// sqrt(|a_true|^2 - 1) = |b_true| under the determinant constraint.
// Near the identity the log1p form keeps full relative precision.
double displacement_of(const Isometry& g);

// Closed-form metric distance arccosh(1 + 2|z-w|^2 / ((1-|z|^2)(1-|w|^2))),
// evaluated through log1p.  Throws std::invalid_argument if |z| >= 1 or
// |w| >= 1.  For distances that exceed what stored points can resolve
// (~36), work with displacement_of on the matrix instead.
double hyp_distance(complexd z, complexd w);

// Elementary building blocks.
Isometry rotation(double phi);                      // z -> e^{i phi} z
Isometry translation_along_real_axis(double length);
Isometry translation_to_origin(complexd p);         // maps p to 0

// Max entrywise distance of a normalized holomorphic matrix from the
// closer of +-identity (the representation is projective).  Returns a
// value >= 1 for antiholomorphic inputs, which can never be the identity.
double deviation_from_identity(const Isometry& g);

}  // namespace driftlab
