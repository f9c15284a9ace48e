#include "driftlab/isometry.hpp"

#include <cmath>

namespace driftlab {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Entry magnitude beyond which compose() stops determinant-renormalizing
// and lets log_scale absorb growth instead: past this size the subtraction
// |a|^2 - |b|^2 cancels catastrophically.
constexpr double kRenormLimit = 1e6;

}  // namespace

double canonical_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;  // fmod rounding at the seam
  return t;
}

Isometry compose(const Isometry& g, const Isometry& h) {
  complexd ah = h.a;
  complexd bh = h.b;
  if (g.antiholomorphic) {
    ah = std::conj(ah);
    bh = std::conj(bh);
  }
  Isometry r;
  r.a = g.a * ah + g.b * std::conj(bh);
  r.b = g.a * bh + g.b * std::conj(ah);
  r.antiholomorphic = g.antiholomorphic != h.antiholomorphic;
  r.log_scale = g.log_scale + h.log_scale;

  double m = std::max(std::abs(r.a), std::abs(r.b));
  if (r.log_scale == 0.0 && m < kRenormLimit) {
    double det = std::norm(r.a) - std::norm(r.b);
    if (det > 0) {
      double s = std::sqrt(det);
      r.a /= s;
      r.b /= s;
    }
  } else if (m > 1e100) {
    // Hard overflow guard for callers that compose without their own
    // renormalization cadence.
    r.a /= m;
    r.b /= m;
    r.log_scale += std::log(m);
  }
  return r;
}

Isometry inverse(const Isometry& g) {
  Isometry r;
  if (!g.antiholomorphic) {
    r.a = std::conj(g.a);
    r.b = -g.b;
  } else {
    // From the composition rule: the antiholomorphic inverse of (a, b) is
    // (-a, conj(b)) with the flag kept (check: compose gives (-|a|^2+|b|^2,
    // -ab+ab) ~ -identity, which is the same projective element).
    r.a = -g.a;
    r.b = std::conj(g.b);
  }
  r.antiholomorphic = g.antiholomorphic;
  r.log_scale = g.log_scale;
  return r;
}

complexd ApplyFn::operator()(const Isometry& g, complexd z) const {
  complexd zp = g.antiholomorphic ? std::conj(z) : z;
  complexd den = std::conj(g.b) * zp + std::conj(g.a);
  if (std::abs(den) < 1e-300)
    throw std::domain_error("isometry apply: denominator underflow");
  return (g.a * zp + g.b) / den;
}

BoundaryPoint ApplyFn::operator()(const Isometry& g, BoundaryPoint xi) const {
  complexd z = std::polar(1.0, xi.theta);
  complexd zp = g.antiholomorphic ? std::conj(z) : z;
  complexd w = (g.a * zp + g.b) / (std::conj(g.b) * zp + std::conj(g.a));
  return BoundaryPoint{canonical_angle(std::arg(w))};
}

double boundary_derivative(const Isometry& g, BoundaryPoint xi) {
  complexd z = std::polar(1.0, xi.theta);
  complexd zp = g.antiholomorphic ? std::conj(z) : z;
  complexd den = std::conj(g.b) * zp + std::conj(g.a);
  double d = 1.0 / std::norm(den);
  if (g.log_scale != 0.0) d *= std::exp(-2.0 * g.log_scale);
  return d;
}

double displacement_of(const Isometry& g) {
  double aa = std::abs(g.a);
  double ab = std::abs(g.b);
  if (g.log_scale == 0.0 && ab < 0.5) {
    // |a| - 1 = |b|^2 / (|a| + 1) under the determinant constraint, so the
    // argument of log1p is exact even when both terms are tiny.
    return 2.0 * std::log1p(std::norm(g.b) / (1.0 + aa) + ab);
  }
  return 2.0 * (g.log_scale + std::log(aa + ab));
}

double hyp_distance(complexd z, complexd w) {
  double nz = std::norm(z);
  double nw = std::norm(w);
  if (nz >= 1.0 || nw >= 1.0)
    throw std::invalid_argument("hyp_distance: point outside the open disk");
  double x = 2.0 * std::norm(z - w) / ((1.0 - nz) * (1.0 - nw));
  // arccosh(1 + x) = log1p(x + sqrt(x (x + 2)))
  return std::log1p(x + std::sqrt(x * (x + 2.0)));
}

Isometry rotation(double phi) {
  Isometry r;
  r.a = std::polar(1.0, phi / 2.0);
  return r;
}

Isometry translation_along_real_axis(double length) {
  Isometry r;
  r.a = std::cosh(length / 2.0);
  r.b = std::sinh(length / 2.0);
  return r;
}

Isometry translation_to_origin(complexd p) {
  double np = std::norm(p);
  if (np >= 1.0)
    throw std::invalid_argument("translation_to_origin: point outside the open disk");
  double s = std::sqrt(1.0 - np);
  Isometry r;
  r.a = 1.0 / s;
  r.b = -p / s;
  return r;
}

double deviation_from_identity(const Isometry& g) {
  if (g.antiholomorphic) return 1.0 + std::abs(g.b);
  double plus = std::max(std::abs(g.a - 1.0), std::abs(g.b));
  double minus = std::max(std::abs(g.a + 1.0), std::abs(g.b));
  return std::min(plus, minus);
}

}  // namespace driftlab
