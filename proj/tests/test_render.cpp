#include <cmath>
#include <string>

#include "doctest.h"
#include "driftlab/entropy.hpp"
#include "driftlab/groups.hpp"
#include "driftlab/render.hpp"
#include "driftlab/rng.hpp"

using namespace driftlab;

namespace {

int count_occurrences(const std::string& hay, const std::string& needle) {
  int count = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size()))
    ++count;
  return count;
}

// Center of the SVG arc that the endpoint parameterization describes
// (circular case, no rotation): the two candidate centers sit symmetric
// about the chord; large_arc != sweep picks the one on the positive side
// of the 90-degree-rotated chord direction.
complexd svg_arc_center(const ArcCommand& arc) {
  complexd mid = 0.5 * (arc.from + arc.to);
  complexd half = 0.5 * (arc.to - arc.from);
  double d2 = std::norm(half);
  double s2 = arc.radius * arc.radius - d2;
  REQUIRE(s2 >= -1e-12);
  double s = std::sqrt(std::max(0.0, s2));
  complexd perp = complexd{0.0, 1.0} * (half / std::abs(half));
  double sign = (arc.large_arc != arc.sweep) ? 1.0 : -1.0;
  return mid + sign * s * perp;
}

}  // namespace

TEST_CASE("arcs through the origin degenerate to lines") {
  ArcCommand arc = arc_between(complexd{-0.4, 0.0}, complexd{0.5, 0.0});
  CHECK(arc.line);
  CHECK(arc.from == complexd{-0.4, 0.0});
  CHECK(arc.to == complexd{0.5, 0.0});
}

TEST_CASE("svg arc flags reproduce the hyperbolic geodesic") {
  SplitMix64 rng(27);
  int checked = 0;
  while (checked < 200) {
    double r1 = 0.85 * std::sqrt(rng.next_unit());
    double t1 = 2.0 * M_PI * rng.next_unit();
    double r2 = 0.85 * std::sqrt(rng.next_unit());
    double t2 = 2.0 * M_PI * rng.next_unit();
    complexd p = std::polar(r1, t1), q = std::polar(r2, t2);
    if (std::abs(p - q) < 0.05) continue;
    ArcCommand arc = arc_between(p, q);
    if (arc.line) continue;
    ++checked;

    CHECK(arc.large_arc == 0);
    // Endpoints are the y-negated inputs.
    CHECK(std::abs(arc.from - std::conj(p)) < 1e-12);
    CHECK(std::abs(arc.to - std::conj(q)) < 1e-12);

    // The center reconstructed from the SVG endpoint parameterization must
    // be the mirrored geodesic center, which lies outside the unit circle
    // and satisfies the orthogonality identity |c|^2 = r^2 + 1.
    complexd center = svg_arc_center(arc);
    GeodesicArc geo = geodesic_through(p, q);
    REQUIRE(geo.kind == GeodesicArc::Kind::circular);
    CHECK(std::abs(center - std::conj(geo.center)) < 1e-9);
    CHECK(std::abs(std::norm(center) - arc.radius * arc.radius - 1.0) < 1e-9);

    // The drawn arc must be the minor one: its midpoint stays inside the
    // disk.  Walk from the 'from' angle toward the 'to' angle in the
    // direction selected by the sweep flag (positive-angle = sweep 1 in
    // svg coordinates).
    double a0 = std::arg(arc.from - center);
    double a1 = std::arg(arc.to - center);
    double delta = a1 - a0;
    while (delta <= -M_PI) delta += 2.0 * M_PI;
    while (delta > M_PI) delta -= 2.0 * M_PI;
    // Minor arc: the short way matches the sweep flag's direction.
    CHECK(((delta > 0.0) ? 1 : 0) == arc.sweep);
    complexd apex = center + std::polar(arc.radius, a0 + 0.5 * delta);
    CHECK(std::abs(apex) < 1.0);
  }
}

TEST_CASE("tessellation svg is well formed and deduplicated") {
  GroupBundle bundle = preset_group("triangle:4,4,4");
  RenderOptions opts;
  opts.radius = 2;
  std::string svg = tessellation_svg(bundle, opts);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("viewBox") != std::string::npos);
  CHECK(svg.find("nan") == std::string::npos);
  CHECK(svg.find("-0.000000") == std::string::npos);
  CHECK(count_occurrences(svg, "class=\"tile\"") ==
        static_cast<int>(distinct_element_count(bundle.gens, 2)));
}

TEST_CASE("radius zero draws only the fundamental polygon") {
  GroupBundle bundle = preset_group("triangle:4,4,4");
  RenderOptions opts;
  opts.radius = 0;
  std::string svg = tessellation_svg(bundle, opts);
  CHECK(count_occurrences(svg, "class=\"tile\"") == 1);
}

TEST_CASE("tessellation rendering is deterministic") {
  GroupBundle bundle = preset_group("bolza");
  RenderOptions opts;
  opts.radius = 1;
  CHECK(tessellation_svg(bundle, opts) == tessellation_svg(bundle, opts));
}

TEST_CASE("render options control the svg attributes") {
  GroupBundle bundle = preset_group("triangle:4,4,4");
  RenderOptions opts;
  opts.radius = 0;
  opts.canvas_size = 512;
  opts.stroke_width = 0.01;
  std::string svg = tessellation_svg(bundle, opts);
  CHECK(svg.find("width=\"512\"") != std::string::npos);
  CHECK(svg.find("0.010000") != std::string::npos);
}

TEST_CASE("orbit svg marks the base point and each step") {
  GroupBundle bundle = preset_group("triangle:4,4,4");
  std::vector<int> word{0, 1, 0, 2};  // g1 g2 g1 g3
  RenderOptions opts;
  std::string svg = orbit_svg(bundle, word, complexd{0.0, 0.0}, opts);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count_occurrences(svg, "class=\"orbit-point\"") == 5);
  CHECK(svg.find(">x0<") != std::string::npos);
  CHECK(svg.find(">x4<") != std::string::npos);
  CHECK(svg.find(">x5<") == std::string::npos);
  CHECK(svg.find("polyline") != std::string::npos);
}

TEST_CASE("orbit svg rejects bad closure indices") {
  GroupBundle bundle = preset_group("triangle:4,4,4");
  RenderOptions opts;
  CHECK_THROWS_AS(orbit_svg(bundle, {0, 7}, complexd{0.0, 0.0}, opts),
                  std::invalid_argument);
}

TEST_CASE("measure svg draws one ray per occupied bin") {
  GroupBundle bundle = preset_group("bolza");
  BoundarySample sample;
  sample.n = 50;
  sample.angles = {0.1, 0.2, 2.0, 4.0, 4.05, 4.1};
  std::string svg = measure_svg(sample, 8, RenderOptions{});
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count_occurrences(svg, "class=\"bin\"") == 3);  // bins 0, 2, 5 occupied
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("measure svg is deterministic") {
  BoundarySample sample;
  sample.n = 10;
  sample.angles = {0.5, 1.5, 2.5};
  CHECK(measure_svg(sample, 16, RenderOptions{}) == measure_svg(sample, 16, RenderOptions{}));
}
