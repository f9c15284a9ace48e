#include "driftlab/groups.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>

namespace driftlab {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

void set_uniform_distribution(GeneratorSet& gens) {
  std::size_t n = symmetric_closure(gens).size();
  gens.step_distribution.assign(n, 1.0 / static_cast<double>(n));
}

// Interior angle at a shared vertex from the tangent directions of the two
// adjacent sides.
double interior_angle(const GeodesicArc& s1, const GeodesicArc& s2, complexd vertex) {
  double t1 = tangent_angle_at(s1, vertex);
  double t2 = tangent_angle_at(s2, vertex);
  double d = std::fmod(std::abs(t1 - t2), kPi);
  return std::min(d, kPi - d);
}

std::vector<double> polygon_angles(const FundamentalPolygon& poly) {
  std::vector<double> angles;
  std::size_t n = poly.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const GeodesicArc& before = poly.sides[(i + n - 1) % n];
    const GeodesicArc& after = poly.sides[i];
    angles.push_back(interior_angle(before, after, poly.vertices[i]));
  }
  return angles;
}

// Walks the directed corners (vertex, incident side) of the octagon under
// the side-pairing maps.  A pairing tiles the plane iff the geometric
// vertex cycles close up with total angle 2 pi; for the regular octagon
// with angles pi/4 that means all eight vertices lie in a single cycle.
bool vertex_cycles_ok(const PairingScheme& pairing,
                      const std::vector<Generator>& gens,
                      const std::vector<complexd>& verts) {
  // maps_from[t] = isometry carrying side t onto its partner.
  std::array<Isometry, 8> maps_from;
  std::array<bool, 8> have{};
  for (const Generator& g : gens) {
    int s = g.paired_side;
    int t = pairing.permutation[s];
    maps_from[t] = g.map;       // generator maps side t onto side s
    maps_from[s] = inverse(g.map);
    have[t] = have[s] = true;
  }
  for (bool h : have)
    if (!h) return false;

  auto nearest_vertex = [&](complexd z) -> int {
    int best = -1;
    double bd = 1e9;
    for (int i = 0; i < 8; ++i) {
      double d = std::abs(z - verts[i]);
      if (d < bd) {
        bd = d;
        best = i;
      }
    }
    return bd < 1e-6 ? best : -1;
  };

  // side v-1 ends at vertex v; side v starts at it
  auto sides_at = [](int v) {
    return std::array<int, 2>{(v + 7) % 8, v};
  };

  std::set<std::pair<int, int>> visited;
  std::vector<int> cycle_lengths;
  for (int v0 = 0; v0 < 8; ++v0) {
    for (int s0 : sides_at(v0)) {
      if (visited.count({v0, s0})) continue;
      int v = v0, s = s0, len = 0;
      while (!visited.count({v, s})) {
        visited.insert({v, s});
        ++len;
        const Isometry& g = maps_from[s];
        int s_img = pairing.permutation[s];
        int v2 = nearest_vertex(apply(g, verts[v]));
        if (v2 < 0) return false;
        auto [sa, sb] = sides_at(v2);
        int s2;
        if (sb == s_img)
          s2 = sa;
        else if (sa == s_img)
          s2 = sb;
        else
          return false;
        v = v2;
        s = s2;
      }
      cycle_lengths.push_back(len);
    }
  }
  // Directed corners double-count the geometric cycle; 16 corners in two
  // mirror-image cycles of length 8 <=> one geometric cycle of all eight
  // vertices, angle sum 8 * pi/4 = 2 pi.
  return cycle_lengths.size() == 2 &&
         cycle_lengths[0] == 8 && cycle_lengths[1] == 8;
}

}  // namespace

bool PairingScheme::valid() const {
  for (int s = 0; s < 8; ++s) {
    int t = permutation[s];
    if (t < 0 || t > 7 || t == s || permutation[t] != s) return false;
  }
  return true;
}

PairingScheme bolza_pairing() {
  PairingScheme p;
  for (int s = 0; s < 8; ++s) p.permutation[s] = (s + 4) % 8;
  return p;
}

PairingScheme gutzwiller_pairing() {
  return PairingScheme{{2, 3, 0, 1, 6, 7, 4, 5}};
}

GroupBundle build_triangle_group(int k, int l, int m, TrianglePlacement placement) {
  if (k < 2 || l < 2 || m < 2)
    throw std::invalid_argument("triangle group: orders must be >= 2");
  // Exact integer form of 1/k + 1/l + 1/m < 1; the floating sum rounds
  // below 1 for Euclidean triples like (2,3,6).
  long long kk = k, ll = l, mm = m;
  if (ll * mm + kk * mm + kk * ll >= kk * ll * mm)
    throw std::invalid_argument(
        "triangle group: requires 1/k + 1/l + 1/m < 1, got 1/" + std::to_string(k) +
        " + 1/" + std::to_string(l) + " + 1/" + std::to_string(m) + " >= 1");

  double al = kPi / k, be = kPi / l, ga = kPi / m;
  // Hyperbolic law of cosines: side AB = c is opposite angle ga at C, and
  // side CA = b is opposite angle be at B.
  double cosh_c = (std::cos(ga) + std::cos(al) * std::cos(be)) / (std::sin(al) * std::sin(be));
  double cosh_b = (std::cos(be) + std::cos(al) * std::cos(ga)) / (std::sin(al) * std::sin(ga));
  complexd A{0.0, 0.0};
  complexd B{std::tanh(std::acosh(cosh_c) / 2.0), 0.0};
  complexd C = std::tanh(std::acosh(cosh_b) / 2.0) * std::polar(1.0, al);
  std::vector<complexd> verts{A, B, C};

  if (placement == TrianglePlacement::barycenter) {
    complexd bc = karcher_mean(verts);
    Isometry recenter = translation_to_origin(bc);
    for (complexd& v : verts) v = apply(recenter, v);
    Isometry align = rotation(-std::arg(verts[0]));
    for (complexd& v : verts) v = apply(align, v);
  }

  GroupBundle bundle;
  bundle.gens.id = "triangle:" + std::to_string(k) + "," + std::to_string(l) + "," +
                   std::to_string(m);
  // sides listed AB, BC, CA so that vertex i joins sides i-1 and i
  bundle.polygon.vertices = verts;
  bundle.polygon.sides = {geodesic_through(verts[0], verts[1]),
                          geodesic_through(verts[1], verts[2]),
                          geodesic_through(verts[2], verts[0])};
  bundle.polygon.angles = polygon_angles(bundle.polygon);

  Isometry g1 = reflection_in_geodesic(verts[0], verts[2]);  // side CA
  Isometry g2 = reflection_in_geodesic(verts[0], verts[1]);  // side AB
  Isometry g3 = reflection_in_geodesic(verts[1], verts[2]);  // side BC
  bundle.gens.generators = {{"g1", g1, true, 2}, {"g2", g2, true, 0}, {"g3", g3, true, 1}};

  bundle.gens.relators = {{1, 1}, {2, 2}, {3, 3}};
  RelatorWord rk, rl, rm;
  for (int i = 0; i < k; ++i) { rk.push_back(1); rk.push_back(2); }
  for (int i = 0; i < l; ++i) { rl.push_back(2); rl.push_back(3); }
  for (int i = 0; i < m; ++i) { rm.push_back(3); rm.push_back(1); }
  bundle.gens.relators.push_back(rk);
  bundle.gens.relators.push_back(rl);
  bundle.gens.relators.push_back(rm);

  set_uniform_distribution(bundle.gens);
  return bundle;
}

GroupBundle build_octagon_group(const PairingScheme& pairing) {
  if (!pairing.valid())
    throw std::invalid_argument("octagon pairing must be a fixed-point-free involution");

  // Regular octagon with angles pi/4: apothem rho = arccosh(cot(pi/8)) and
  // circumradius R = arccosh(cot^2(pi/8)) = arccosh(3 + 2 sqrt(2)).
  // Side midpoints sit on the rays at angles s pi/4, vertices at odd
  // multiples of pi/8.
  const double rho = std::acosh(1.0 + std::sqrt(2.0));
  const double R = std::acosh(3.0 + 2.0 * std::sqrt(2.0));
  const double rv = std::tanh(R / 2.0);

  std::vector<complexd> verts(8);
  for (int j = 0; j < 8; ++j)
    verts[j] = rv * std::polar(1.0, (2.0 * j - 1.0) * kPi / 8.0);

  // Generator carrying side t onto side s: rotate side t's midpoint ray to
  // the real axis reversed, translate through the octagon (length 2 rho),
  // then rotate onto side s's ray.
  auto pairing_generator = [&](int s, int t) {
    Isometry r = compose(rotation(s * kPi / 4.0), translation_along_real_axis(2.0 * rho));
    return compose(r, rotation(kPi - t * kPi / 4.0));
  };

  GroupBundle bundle;
  bundle.polygon.vertices = verts;
  for (int j = 0; j < 8; ++j)
    bundle.polygon.sides.push_back(geodesic_through(verts[j], verts[(j + 1) % 8]));
  bundle.polygon.angles = polygon_angles(bundle.polygon);

  // One generator per pair, sourced at the smaller side index.
  int gi = 0;
  for (int s = 0; s < 8; ++s) {
    int t = pairing.permutation[s];
    if (t < s) continue;
    ++gi;
    bundle.gens.generators.push_back(
        {"g" + std::to_string(gi), pairing_generator(s, t), false, s});
  }

  if (pairing.permutation == bolza_pairing().permutation) {
    bundle.gens.id = "bolza";
    bundle.gens.relators = {{1, -2, 3, -4, -1, 2, -3, 4}};
  } else if (pairing.permutation == gutzwiller_pairing().permutation) {
    bundle.gens.id = "gutzwiller";
    // Recovered by searching freely reduced words of length 8 that evaluate
    // to +-identity in these generators; unique up to cyclic rotation and
    // inversion.
    bundle.gens.relators = {{1, 2, -1, -4, 3, 4, -3, -2}};
  } else {
    bundle.gens.id = "octagon:custom";
  }

  if (!vertex_cycles_ok(pairing, bundle.gens.generators, verts)) {
    bundle.tiling_warning = true;
    bundle.notes = "vertex cycles do not close with angle sum 2 pi; the pairing does not tile";
  }

  set_uniform_distribution(bundle.gens);
  return bundle;
}

Isometry evaluate_word(const GeneratorSet& gens, const RelatorWord& word) {
  Isometry p;
  for (int s : word) {
    int idx = std::abs(s) - 1;
    if (idx < 0 || idx >= static_cast<int>(gens.generators.size()))
      throw std::out_of_range("word references generator " + std::to_string(s));
    const Isometry& g = gens.generators[idx].map;
    p = compose(p, s > 0 ? g : inverse(g));
  }
  return p;
}

RelatorReport verify_relators(const GeneratorSet& gens, double tol) {
  RelatorReport report;
  for (const RelatorWord& w : gens.relators) {
    Isometry p = evaluate_word(gens, w);
    RelatorCheck c;
    c.word = w;
    c.antiholomorphic = p.antiholomorphic;
    c.deviation = deviation_from_identity(p);
    c.pass = !p.antiholomorphic && c.deviation < tol;
    report.all_pass = report.all_pass && c.pass;
    report.checks.push_back(c);
  }
  return report;
}

std::vector<LabeledIsometry> symmetric_closure(const GeneratorSet& gens) {
  std::vector<LabeledIsometry> out;
  for (const Generator& g : gens.generators) {
    out.push_back({g.label, g.map});
    if (!g.is_involution) out.push_back({g.label + "^-1", inverse(g.map)});
  }
  return out;
}

int closure_index(const GeneratorSet& gens, int signed_index) {
  int idx = std::abs(signed_index) - 1;
  if (signed_index == 0 || idx >= static_cast<int>(gens.generators.size()))
    throw std::out_of_range("closure_index: generator " + std::to_string(signed_index));
  int pos = 0;
  for (int i = 0; i < idx; ++i) pos += gens.generators[static_cast<std::size_t>(i)].is_involution ? 1 : 2;
  if (signed_index < 0 && !gens.generators[static_cast<std::size_t>(idx)].is_involution) ++pos;
  return pos;
}

std::vector<WordEntry> word_ball(const GeneratorSet& gens, int radius,
                                 std::size_t budget) {
  auto closure = symmetric_closure(gens);
  std::size_t total = 1, layer = 1;
  for (int r = 1; r <= radius; ++r) {
    layer *= closure.size();
    total += layer;
    if (total > budget)
      throw std::length_error("word ball exceeds enumeration budget");
  }
  std::vector<WordEntry> out;
  out.reserve(total);
  out.push_back({{}, identity_isometry()});
  std::size_t level_begin = 0, level_end = 1;
  for (int r = 1; r <= radius; ++r) {
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (std::size_t j = 0; j < closure.size(); ++j) {
        WordEntry e;
        e.word = out[i].word;
        e.word.push_back(static_cast<int>(j));
        e.map = compose(out[i].map, closure[j].map);
        out.push_back(std::move(e));
      }
    }
    level_begin = level_end;
    level_end = out.size();
  }
  return out;
}

std::size_t default_enumeration_budget() {
  if (const char* env = std::getenv("DRIFTLAB_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 100000000;
}

GroupBundle preset_group(const std::string& id, TrianglePlacement placement) {
  if (id == "bolza") return build_octagon_group(bolza_pairing());
  if (id == "gutzwiller") return build_octagon_group(gutzwiller_pairing());
  if (id.rfind("triangle:", 0) == 0) {
    int k, l, m;
    if (std::sscanf(id.c_str() + 9, "%d,%d,%d", &k, &l, &m) != 3)
      throw std::invalid_argument("bad triangle preset (want triangle:k,l,m): " + id);
    return build_triangle_group(k, l, m, placement);
  }
  throw std::invalid_argument("unknown group preset: " + id);
}

bool is_known_preset(const std::string& id) {
  if (id == "bolza" || id == "gutzwiller") return true;
  if (id.rfind("triangle:", 0) == 0) {
    int k, l, m;
    return std::sscanf(id.c_str() + 9, "%d,%d,%d", &k, &l, &m) == 3;
  }
  return false;
}

std::vector<std::array<int, 3>> reference_triangles() {
  return {{3, 7, 2},  {3, 8, 2},  {3, 9, 2},  {4, 5, 2},   {4, 6, 2},  {4, 8, 2},
          {5, 5, 2},  {5, 6, 2},  {5, 7, 2},  {6, 6, 2},   {4, 3, 3},  {5, 3, 3},
          {6, 3, 3},  {7, 3, 3},  {3, 4, 4},  {3, 6, 6},   {4, 4, 4},  {5, 5, 5},
          {6, 6, 6},  {7, 7, 7},  {8, 8, 8},  {9, 9, 9},   {10, 10, 10}};
}

}  // namespace driftlab
