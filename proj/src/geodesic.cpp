#include "driftlab/geodesic.hpp"

#include <cmath>

namespace driftlab {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

bool collinear_with_origin(complexd p, complexd q) {
  double cross = p.real() * q.imag() - p.imag() * q.real();
  double scale = std::max({std::abs(p), std::abs(q), 1e-30});
  return std::abs(cross) < 1e-14 * scale || std::abs(p) < 1e-15 ||
         std::abs(q) < 1e-15;
}

}  // namespace

GeodesicArc geodesic_through(complexd p, complexd q) {
  if (std::abs(p - q) < 1e-12)
    throw std::invalid_argument("geodesic_through: points too close");
  GeodesicArc arc;
  if (collinear_with_origin(p, q)) {
    arc.kind = GeodesicArc::Kind::diameter;
    complexd dir = (std::abs(q) > std::abs(p)) ? q : p;
    if (std::abs(dir) < 1e-15) dir = q - p;
    double t = std::atan2(dir.imag(), dir.real());
    if (t < 0) t += kPi;
    if (t >= kPi) t -= kPi;
    arc.angle = t;
    return arc;
  }
  // [ 2 p.re  2 p.im ] [c.re]   [ |p|^2 + 1 ]
  // [ 2 q.re  2 q.im ] [c.im] = [ |q|^2 + 1 ]
  double a11 = 2.0 * p.real(), a12 = 2.0 * p.imag();
  double a21 = 2.0 * q.real(), a22 = 2.0 * q.imag();
  double r1 = std::norm(p) + 1.0;
  double r2 = std::norm(q) + 1.0;
  double det = a11 * a22 - a12 * a21;
  double scale = std::max({std::abs(a11), std::abs(a12), std::abs(a21),
                           std::abs(a22), 1e-30});
  if (std::abs(det) < 1e-12 * scale * scale)
    throw std::invalid_argument("geodesic_through: ill-conditioned point pair");
  arc.kind = GeodesicArc::Kind::circular;
  arc.center = complexd{(r1 * a22 - r2 * a12) / det, (a11 * r2 - a21 * r1) / det};
  double c2 = std::norm(arc.center);
  arc.radius = std::sqrt(std::max(c2 - 1.0, 0.0));
  return arc;
}

Isometry reflection_in_geodesic(complexd p, complexd q) {
  GeodesicArc arc = geodesic_through(p, q);
  Isometry r;
  r.antiholomorphic = true;
  if (arc.kind == GeodesicArc::Kind::diameter) {
    r.a = std::polar(1.0, arc.angle);
    r.b = 0.0;
    return r;
  }
  r.a = complexd{0.0, 1.0} * arc.center / arc.radius;
  r.b = complexd{0.0, -1.0} / arc.radius;
  // |a|^2 - |b|^2 = (|c|^2 - 1) / r^2 = 1 already; renormalize the rounding.
  double s = std::sqrt(std::norm(r.a) - std::norm(r.b));
  r.a /= s;
  r.b /= s;
  return r;
}

double tangent_angle_at(const GeodesicArc& arc, complexd z) {
  double t;
  if (arc.kind == GeodesicArc::Kind::diameter) {
    t = arc.angle;
  } else {
    // Tangent of a circle is orthogonal to the radius vector.
    complexd radial = z - arc.center;
    t = std::atan2(radial.imag(), radial.real()) + kPi / 2.0;
  }
  t = std::fmod(t, kPi);
  if (t < 0) t += kPi;
  return t;
}

double euclidean_distance_to(const GeodesicArc& arc, complexd z) {
  if (arc.kind == GeodesicArc::Kind::diameter) {
    complexd dir = std::polar(1.0, arc.angle);
    double cross = dir.real() * z.imag() - dir.imag() * z.real();
    return std::abs(cross);
  }
  return std::abs(std::abs(z - arc.center) - arc.radius);
}

complexd karcher_mean(const std::vector<complexd>& points, double tol) {
  if (points.empty())
    throw std::invalid_argument("karcher_mean: no points");
  complexd x{0.0, 0.0};
  for (complexd p : points) x += p;
  x /= static_cast<double>(points.size());
  for (int iter = 0; iter < 200; ++iter) {
    Isometry to_origin = translation_to_origin(x);
    complexd mean{0.0, 0.0};
    for (complexd p : points) {
      complexd u = apply(to_origin, p);
      double au = std::abs(u);
      if (au > 1e-18) mean += (u / au) * (2.0 * std::atanh(au));
    }
    mean /= static_cast<double>(points.size());
    double am = std::abs(mean);
    if (am < tol) return x;
    complexd step = std::tanh(am / 2.0) * (mean / am);
    x = apply(inverse(to_origin), step);
  }
  return x;
}

}  // namespace driftlab
