#include <cmath>

#include "doctest.h"
#include "driftlab/geodesic.hpp"
#include "driftlab/rng.hpp"

using namespace driftlab;

namespace {

complexd random_interior(SplitMix64& rng, double rmax = 0.9) {
  double r = rmax * std::sqrt(rng.next_unit());
  double t = 2.0 * M_PI * rng.next_unit();
  return std::polar(r, t);
}

}  // namespace

TEST_CASE("geodesic through collinear points is a diameter") {
  GeodesicArc arc = geodesic_through(complexd{0.0, 0.0}, complexd{0.5, 0.0});
  CHECK(arc.kind == GeodesicArc::Kind::diameter);
  CHECK(arc.angle == doctest::Approx(0.0));

  GeodesicArc tilted = geodesic_through(complexd{-0.2, -0.2}, complexd{0.4, 0.4});
  CHECK(tilted.kind == GeodesicArc::Kind::diameter);
  CHECK(tilted.angle == doctest::Approx(M_PI / 4));
}

TEST_CASE("circular geodesics are orthogonal to the unit circle") {
  GeodesicArc arc = geodesic_through(complexd{0.3, 0.0}, complexd{0.0, 0.3});
  REQUIRE(arc.kind == GeodesicArc::Kind::circular);
  // Symmetry: the center lies on Re = Im.
  CHECK(arc.center.real() == doctest::Approx(arc.center.imag()).epsilon(1e-12));
  CHECK(std::norm(arc.center) - arc.radius * arc.radius == doctest::Approx(1.0).epsilon(1e-12));
  // Both defining points sit on the circle.
  CHECK(std::abs(arc.center - complexd{0.3, 0.0}) == doctest::Approx(arc.radius).epsilon(1e-12));
  CHECK(std::abs(arc.center - complexd{0.0, 0.3}) == doctest::Approx(arc.radius).epsilon(1e-12));
}

TEST_CASE("geodesic_through is symmetric in its arguments") {
  SplitMix64 rng(5);
  for (int i = 0; i < 100; ++i) {
    complexd p = random_interior(rng), q = random_interior(rng);
    if (std::abs(p - q) < 1e-3) continue;
    GeodesicArc a = geodesic_through(p, q), b = geodesic_through(q, p);
    CHECK(a.kind == b.kind);
    if (a.kind == GeodesicArc::Kind::circular) {
      CHECK(std::abs(a.center - b.center) < 1e-10);
      CHECK(a.radius == doctest::Approx(b.radius).epsilon(1e-12));
    } else {
      CHECK(a.angle == doctest::Approx(b.angle).epsilon(1e-10));
    }
  }
}

TEST_CASE("orthogonality invariant holds for random circular geodesics") {
  SplitMix64 rng(9);
  for (int i = 0; i < 200; ++i) {
    complexd p = random_interior(rng), q = random_interior(rng);
    if (std::abs(p - q) < 1e-3) continue;
    GeodesicArc arc = geodesic_through(p, q);
    if (arc.kind != GeodesicArc::Kind::circular) continue;
    CHECK(std::abs(std::norm(arc.center) - arc.radius * arc.radius - 1.0) < 1e-9);
    CHECK(euclidean_distance_to(arc, p) < 1e-10);
    CHECK(euclidean_distance_to(arc, q) < 1e-10);
  }
}

TEST_CASE("degenerate geodesic inputs are rejected") {
  CHECK_THROWS_AS(geodesic_through(complexd{0.3, 0.1}, complexd{0.3, 0.1}),
                  std::invalid_argument);
}

TEST_CASE("reflection in a diameter conjugates") {
  Isometry r = reflection_in_geodesic(complexd{0.3, 0.0}, complexd{-0.3, 0.0});
  CHECK(r.antiholomorphic);
  CHECK(std::abs(apply(r, complexd{0.5, 0.0}) - complexd{0.5, 0.0}) < 1e-12);
  CHECK(std::abs(apply(r, complexd{0.0, 0.2}) - complexd{0.0, -0.2}) < 1e-12);
}

TEST_CASE("reflections fix their geodesic and square to the identity") {
  SplitMix64 rng(13);
  for (int i = 0; i < 200; ++i) {
    complexd p = random_interior(rng), q = random_interior(rng);
    if (std::abs(p - q) < 1e-2) continue;
    Isometry r = reflection_in_geodesic(p, q);
    CHECK(r.antiholomorphic);
    CHECK(std::abs(apply(r, p) - p) < 1e-10);
    CHECK(std::abs(apply(r, q) - q) < 1e-10);
    CHECK(deviation_from_identity(compose(r, r)) < 1e-10);
    // Isometry property.
    complexd w = random_interior(rng), w2 = random_interior(rng);
    CHECK(std::abs(hyp_distance(apply(r, w), apply(r, w2)) - hyp_distance(w, w2)) < 1e-9);
  }
}

TEST_CASE("reflection rejects ill-posed inputs") {
  CHECK_THROWS_AS(reflection_in_geodesic(complexd{0.4, 0.2}, complexd{0.4, 0.2}),
                  std::invalid_argument);
}

TEST_CASE("tangent angles are well defined on both kinds") {
  GeodesicArc diam = geodesic_through(complexd{0.0, 0.0}, complexd{0.5, 0.0});
  CHECK(std::abs(std::remainder(tangent_angle_at(diam, complexd{0.2, 0.0}), M_PI)) < 1e-12);

  GeodesicArc arc = geodesic_through(complexd{0.3, 0.0}, complexd{0.0, 0.3});
  double t = tangent_angle_at(arc, complexd{0.3, 0.0});
  // Tangent is perpendicular to the radius from the arc center.
  double radial = std::arg(complexd{0.3, 0.0} - arc.center);
  CHECK(std::abs(std::remainder(t - radial - M_PI / 2, M_PI)) < 1e-10);
}

TEST_CASE("karcher mean of a symmetric configuration is the origin") {
  std::vector<complexd> pts{complexd{0.5, 0.0}, complexd{-0.5, 0.0}, complexd{0.0, 0.5},
                            complexd{0.0, -0.5}};
  CHECK(std::abs(karcher_mean(pts)) < 1e-12);

  // Translating the configuration translates the mean.
  Isometry g = translation_along_real_axis(0.8);
  std::vector<complexd> moved;
  for (complexd p : pts) moved.push_back(apply(g, p));
  CHECK(std::abs(karcher_mean(moved) - apply(g, complexd{0.0, 0.0})) < 1e-10);
}
