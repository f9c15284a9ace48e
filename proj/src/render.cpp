#include "driftlab/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "driftlab/geodesic.hpp"

namespace driftlab {

namespace {

// Fixed-precision coordinate formatting keeps the output deterministic.
std::string fmt(double x) {
  if (x > -5e-7 && x < 0.0) x = 0.0;  // avoid "-0.000000"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string svg_open(int canvas, double extent) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << canvas
      << "\" height=\"" << canvas << "\" viewBox=\"" << fmt(-extent) << " " << fmt(-extent)
      << " " << fmt(2 * extent) << " " << fmt(2 * extent) << "\">\n";
  return out.str();
}

std::string boundary_circle(double stroke) {
  return "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#999999\" stroke-width=\"" +
         fmt(stroke) + "\"/>\n";
}

// SVG coordinates mirror the y axis.
complexd to_svg(complexd z) { return complexd(z.real(), -z.imag()); }

std::string path_for_cycle(const std::vector<complexd>& vertices) {
  std::ostringstream d;
  d << "M " << fmt(to_svg(vertices[0]).real()) << " " << fmt(to_svg(vertices[0]).imag());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    complexd p = vertices[i];
    complexd q = vertices[(i + 1) % vertices.size()];
    ArcCommand arc = arc_between(p, q);
    if (arc.line) {
      d << " L " << fmt(arc.to.real()) << " " << fmt(arc.to.imag());
    } else {
      d << " A " << fmt(arc.radius) << " " << fmt(arc.radius) << " 0 " << arc.large_arc
        << " " << arc.sweep << " " << fmt(arc.to.real()) << " " << fmt(arc.to.imag());
    }
  }
  d << " Z";
  return d.str();
}

}  // namespace

ArcCommand arc_between(complexd p, complexd q) {
  GeodesicArc g = geodesic_through(p, q);
  ArcCommand cmd;
  cmd.from = to_svg(p);
  cmd.to = to_svg(q);
  if (g.kind == GeodesicArc::Kind::diameter) {
    cmd.line = true;
    return cmd;
  }
  cmd.radius = g.radius;
  // Minor arc from p to q around the center: sweep-flag 1 means increasing
  // angle in raw SVG coordinates, which is clockwise in disk coordinates.
  double cross = std::imag(std::conj(p - g.center) * (q - g.center));
  cmd.sweep = cross < 0.0 ? 1 : 0;
  return cmd;
}

std::string tessellation_svg(const GroupBundle& bundle, const RenderOptions& opts) {
  std::vector<Isometry> reps = distinct_ball_representatives(
      bundle.gens, opts.radius, opts.budget, opts.keys);

  std::ostringstream out;
  out << svg_open(opts.canvas_size, 1.05);
  out << boundary_circle(opts.stroke_width);
  out << "<g fill=\"none\" stroke=\"#1a1a1a\" stroke-width=\"" << fmt(opts.stroke_width)
      << "\">\n";
  std::vector<complexd> image(bundle.polygon.vertices.size());
  for (const Isometry& g : reps) {
    for (std::size_t i = 0; i < image.size(); ++i)
      image[i] = apply(g, bundle.polygon.vertices[i]);
    out << "<path class=\"tile\" d=\"" << path_for_cycle(image) << "\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

std::string orbit_svg(const GroupBundle& bundle, const std::vector<int>& closure_indices,
                      complexd base, const RenderOptions& opts) {
  std::vector<LabeledIsometry> closure = symmetric_closure(bundle.gens);
  std::vector<complexd> points{base};
  std::vector<std::string> labels{"x0"};
  Isometry w;
  for (std::size_t k = 0; k < closure_indices.size(); ++k) {
    int idx = closure_indices[k];
    if (idx < 0 || idx >= static_cast<int>(closure.size()))
      throw std::invalid_argument("orbit_svg: closure index out of range");
    w = compose(w, closure[static_cast<std::size_t>(idx)].map);
    points.push_back(apply(w, base));
    labels.push_back("x" + std::to_string(k + 1));
  }

  std::ostringstream out;
  out << svg_open(opts.canvas_size, 1.05);
  out << boundary_circle(opts.stroke_width);

  std::vector<complexd> polygon(bundle.polygon.vertices.size());
  for (std::size_t i = 0; i < polygon.size(); ++i) polygon[i] = bundle.polygon.vertices[i];
  out << "<path fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"" << fmt(opts.stroke_width)
      << "\" d=\"" << path_for_cycle(polygon) << "\"/>\n";

  out << "<polyline fill=\"none\" stroke=\"#2255cc\" stroke-width=\""
      << fmt(1.5 * opts.stroke_width) << "\" points=\"";
  for (std::size_t i = 0; i < points.size(); ++i) {
    complexd s = to_svg(points[i]);
    out << (i ? " " : "") << fmt(s.real()) << "," << fmt(s.imag());
  }
  out << "\"/>\n";

  for (std::size_t i = 0; i < points.size(); ++i) {
    complexd s = to_svg(points[i]);
    out << "<circle class=\"orbit-point\" cx=\"" << fmt(s.real()) << "\" cy=\""
        << fmt(s.imag()) << "\" r=\"" << fmt(2.5 * opts.stroke_width)
        << "\" fill=\"#cc3322\"/>\n";
    out << "<text x=\"" << fmt(s.real() + 4 * opts.stroke_width) << "\" y=\""
        << fmt(s.imag() - 4 * opts.stroke_width)
        << "\" font-size=\"0.04\" font-family=\"sans-serif\">" << labels[i] << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string measure_svg(const BoundarySample& sample, int bins, const RenderOptions& opts) {
  std::vector<std::int64_t> histogram = angle_histogram(sample.angles, bins);
  std::int64_t peak = 1;
  for (std::int64_t c : histogram)
    if (c > peak) peak = c;

  std::ostringstream out;
  out << svg_open(opts.canvas_size, 1.45);
  out << boundary_circle(opts.stroke_width);
  out << "<g stroke=\"#2255cc\" stroke-width=\"" << fmt(opts.stroke_width * 1.5) << "\">\n";
  const double base_r = 1.02;
  const double max_len = 0.38;
  for (int b = 0; b < bins; ++b) {
    if (histogram[static_cast<std::size_t>(b)] == 0) continue;
    double theta = (b + 0.5) * 2.0 * std::numbers::pi / bins;
    double len = max_len * static_cast<double>(histogram[static_cast<std::size_t>(b)]) /
                 static_cast<double>(peak);
    complexd dir = std::polar(1.0, theta);
    complexd p0 = to_svg(base_r * dir);
    complexd p1 = to_svg((base_r + len) * dir);
    out << "<line class=\"bin\" x1=\"" << fmt(p0.real()) << "\" y1=\"" << fmt(p0.imag())
        << "\" x2=\"" << fmt(p1.real()) << "\" y2=\"" << fmt(p1.imag()) << "\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace driftlab
