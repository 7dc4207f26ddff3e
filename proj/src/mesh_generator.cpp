#include "slfem/mesh_generator.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <string>

namespace slfem {

namespace {

using EdgeKey = std::pair<int, int>;

EdgeKey edge_key(int a, int b) { return std::minmax(a, b); }

double signed_area2(const Point2& a, const Point2& b, const Point2& c) {
  return cross(b - a, c - a);
}

double dist_point_segment(const Point2& p, const Point2& a, const Point2& b) {
  const Point2 ab = b - a;
  const double len2 = dot(ab, ab);
  double t = (len2 > 0.0) ? dot(p - a, ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return distance(p, a + t * ab);
}

bool point_in_polygon(const Point2& p, const std::vector<Point2>& poly) {
  bool in = false;
  for (size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    const Point2& a = poly[i];
    const Point2& b = poly[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x_int = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
      if (p.x < x_int) in = !in;
    }
  }
  return in;
}

// ---------------------------------------------------------------------------
// Vertex-level triangulation fed into the cubic enrichment step.

struct LinTri {
  std::array<int, 3> v;  // ccw; a curved edge, if any, occupies v[0]-v[1]
  int circle = -1;       // index into circles when edge v[0]-v[1] is curved
};

struct LinearMesh {
  std::vector<Point2> verts;
  std::vector<LinTri> tris;
  std::vector<CircleSpec> circles;
  std::map<EdgeKey, std::string> edge_labels;        // boundary chords only
  std::vector<std::set<std::string>> vert_labels;    // per-vertex markers
};

CurvedEdge arc_for(const LinearMesh& lm, const LinTri& tri) {
  const CircleSpec& c = lm.circles.at(tri.circle);
  const Point2 r1 = lm.verts[tri.v[0]] - c.center;
  const Point2 r2 = lm.verts[tri.v[1]] - c.center;
  // Short-way travel from t1 to t2; chords subtend less than pi.
  const Orientation o = (cross(r1, r2) > 0.0) ? Orientation::ccw : Orientation::cw;
  return {c.center, c.radius, o};
}

Mesh enrich_to_cubic(const LinearMesh& lm) {
  Mesh mesh;
  std::map<std::string, std::set<int>> groups;

  auto push_node = [&mesh, &groups](const Point2& p, const std::set<std::string>& labels) {
    Node node{mesh.n_dof(), p, std::nullopt};
    if (!labels.empty()) {
      node.marker = *labels.begin();
      for (const std::string& l : labels) groups[l].insert(node.id);
    }
    mesh.nodes.push_back(std::move(node));
    return mesh.nodes.back().id;
  };

  for (size_t v = 0; v < lm.verts.size(); ++v) {
    push_node(lm.verts[v], lm.vert_labels[v]);
  }

  std::map<EdgeKey, std::pair<int, int>> edge_nodes;  // key -> (near min, near max)
  for (const LinTri& tri : lm.tris) {
    CurvedTriangle10 el;
    el.nodes[0] = tri.v[0];
    el.nodes[1] = tri.v[1];
    el.nodes[2] = tri.v[2];
    if (tri.circle >= 0) el.curved_edge = arc_for(lm, tri);

    const struct {
      int a, b, slot_a, slot_b;
      bool on_curve;
    } sides[3] = {
        {tri.v[0], tri.v[1], 3, 4, tri.circle >= 0},
        {tri.v[1], tri.v[2], 5, 6, false},
        {tri.v[2], tri.v[0], 7, 8, false},
    };
    for (const auto& s : sides) {
      const EdgeKey key = edge_key(s.a, s.b);
      auto it = edge_nodes.find(key);
      if (it == edge_nodes.end()) {
        const auto [near_a, near_b] = place_curved_edge_nodes(
            lm.verts[s.a], lm.verts[s.b], s.on_curve ? el.curved_edge : std::nullopt);
        std::set<std::string> labels;
        if (auto lab = lm.edge_labels.find(key); lab != lm.edge_labels.end()) {
          labels.insert(lab->second);
        }
        const int id_a = push_node(near_a, labels);
        const int id_b = push_node(near_b, labels);
        it = edge_nodes.emplace(key, s.a < s.b ? std::pair{id_a, id_b} : std::pair{id_b, id_a})
                 .first;
      }
      el.nodes[s.slot_a] = (s.a < s.b) ? it->second.first : it->second.second;
      el.nodes[s.slot_b] = (s.a < s.b) ? it->second.second : it->second.first;
    }

    const Point2 t10 =
        interior_node(lm.verts[tri.v[0]], lm.verts[tri.v[1]], lm.verts[tri.v[2]],
                      mesh.nodes[el.nodes[3]].coords, mesh.nodes[el.nodes[4]].coords);
    el.nodes[9] = push_node(t10, {});
    mesh.elements.push_back(el);
  }

  for (const auto& [label, ids] : groups) {
    mesh.boundary_groups.emplace(label, std::vector<int>(ids.begin(), ids.end()));
  }
  return mesh;
}

// ---------------------------------------------------------------------------
// Bowyer-Watson Delaunay triangulation.

struct Tri {
  int a, b, c;  // ccw
};

bool in_circumcircle(const Point2& a, const Point2& b, const Point2& c, const Point2& p) {
  const double ax = a.x - p.x, ay = a.y - p.y;
  const double bx = b.x - p.x, by = b.y - p.y;
  const double cx = c.x - p.x, cy = c.y - p.y;
  const double det = (ax * ax + ay * ay) * (bx * cy - by * cx) -
                     (bx * bx + by * by) * (ax * cy - ay * cx) +
                     (cx * cx + cy * cy) * (ax * by - ay * bx);
  return det > 0.0;
}

std::vector<Tri> bowyer_watson(const std::vector<Point2>& pts, const std::vector<int>& order) {
  const int n = static_cast<int>(pts.size());
  std::vector<Point2> p(pts);
  p.push_back({-30.0, -25.0});
  p.push_back({31.0, -25.0});
  p.push_back({0.5, 55.0});
  std::vector<Tri> tris{{n, n + 1, n + 2}};

  std::vector<char> bad;
  for (int ip : order) {
    const Point2& q = p[ip];
    bad.assign(tris.size(), 0);
    std::set<EdgeKey> bad_dir;  // directed edges of bad triangles, as (u,v)
    for (size_t t = 0; t < tris.size(); ++t) {
      if (in_circumcircle(p[tris[t].a], p[tris[t].b], p[tris[t].c], q)) {
        bad[t] = 1;
        bad_dir.insert({tris[t].a, tris[t].b});
        bad_dir.insert({tris[t].b, tris[t].c});
        bad_dir.insert({tris[t].c, tris[t].a});
      }
    }
    std::vector<Tri> next;
    next.reserve(tris.size() + 4);
    for (size_t t = 0; t < tris.size(); ++t) {
      if (!bad[t]) next.push_back(tris[t]);
    }
    // Cavity boundary: directed bad edge whose reverse is not bad.  The new
    // point lies left of each such edge, so the fan stays ccw.
    for (const auto& [u, v] : bad_dir) {
      if (!bad_dir.count({v, u})) next.push_back({u, v, ip});
    }
    tris.swap(next);
  }

  std::vector<Tri> out;
  for (const Tri& t : tris) {
    if (t.a < n && t.b < n && t.c < n) out.push_back(t);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Unstructured generation for the notched domains.

struct BoundarySetup {
  std::vector<Point2> pts;                       // boundary vertices
  std::vector<std::set<std::string>> labels;     // per boundary vertex
  struct Chord {
    std::string label;
    int circle = -1;
  };
  std::map<EdgeKey, Chord> chords;               // consecutive boundary pairs
  std::vector<Point2> polygon;                   // outer loop corners, ccw
  std::vector<std::pair<Point2, Point2>> walls;  // outer segments, clearance
  std::vector<CircleSpec> circles;
  // One helper vertex per hole.  The points of a hole ring are cocircular,
  // so with an empty hole the incremental triangulation would have to
  // resolve their in-circumcircle signs from rounding noise; a center seed
  // keeps every test it meets well-conditioned.  Seed fans are culled with
  // the hole, and the seeds leave the mesh during compaction.
  std::vector<Point2> seeds;
  double h = 0.0;

  bool inside(const Point2& p) const {
    if (!point_in_polygon(p, polygon)) return false;
    for (const CircleSpec& c : circles) {
      if (distance(p, c.center) <= c.radius) return false;
    }
    return true;
  }

  bool clear_of_boundary(const Point2& p, double gap) const {
    for (const auto& [a, b] : walls) {
      if (dist_point_segment(p, a, b) < gap) return false;
    }
    for (const CircleSpec& c : circles) {
      if (std::abs(distance(p, c.center) - c.radius) < gap) return false;
    }
    return true;
  }
};

BoundarySetup build_boundary(const DomainSpec& spec, double h) {
  if (!(h > 0.0)) throw ConfigError("target_h must be positive");
  if (!spec.notch) throw ConfigError("notched domains require a notch spec");
  const NotchSpec& notch = *spec.notch;
  if (!(notch.half_angle > 0.0) || !(notch.half_angle < std::numbers::pi / 2.0)) {
    throw GeometryError("degenerate notch: opening angle must lie in (0, pi)");
  }
  if (!(notch.depth > 0.0)) throw GeometryError("notch depth must be positive");
  if (std::abs(notch.apex.y - notch.depth) > 1e-12) {
    throw GeometryError("notch mouth must lie on the bottom edge (apex.y == depth)");
  }
  const double half_width = notch.depth * std::tan(notch.half_angle);
  const Point2 mouth_l{notch.apex.x - half_width, 0.0};
  const Point2 mouth_r{notch.apex.x + half_width, 0.0};
  if (!(mouth_l.x > 0.0) || !(mouth_r.x < 1.0) || !(notch.apex.y < 1.0)) {
    throw GeometryError("notch does not fit inside the unit square");
  }

  BoundarySetup bs;
  bs.h = h;
  bs.circles = spec.inclusions;
  bs.polygon = {mouth_r, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}, {0.0, 0.0}, mouth_l, notch.apex};
  for (size_t i = 0; i < bs.polygon.size(); ++i) {
    bs.walls.emplace_back(bs.polygon[i], bs.polygon[(i + 1) % bs.polygon.size()]);
  }

  for (const CircleSpec& c : bs.circles) {
    if (!(c.radius > 0.0)) throw GeometryError("inclusion radius must be positive");
    if (!point_in_polygon(c.center, bs.polygon)) {
      throw GeometryError("inclusion center outside the domain");
    }
    for (const auto& [a, b] : bs.walls) {
      if (dist_point_segment(c.center, a, b) <= c.radius + 0.5 * h) {
        throw GeometryError("inclusion intersects or nearly touches the outer boundary");
      }
    }
  }
  for (size_t i = 0; i < bs.circles.size(); ++i) {
    for (size_t j = i + 1; j < bs.circles.size(); ++j) {
      const double gap = distance(bs.circles[i].center, bs.circles[j].center) -
                         bs.circles[i].radius - bs.circles[j].radius;
      if (gap <= 0.5 * h) {
        throw GeometryError("inclusions intersect or nearly touch each other");
      }
    }
  }

  // Outer loop, one labeled chain per polygon segment; chains share their
  // endpoint vertices so corners carry both adjacent labels.
  const size_t n_seg = bs.polygon.size();
  std::vector<int> corner_id(n_seg, -1);
  for (size_t s = 0; s < n_seg; ++s) {
    const Point2 a = bs.polygon[s];
    const Point2 b = bs.polygon[(s + 1) % n_seg];
    const std::string label = "Gamma" + std::to_string(s + 1);
    if (corner_id[s] < 0) {
      corner_id[s] = static_cast<int>(bs.pts.size());
      bs.pts.push_back(a);
      bs.labels.emplace_back();
    }
    int prev = corner_id[s];
    bs.labels[prev].insert(label);
    const int n_sub = std::max<int>(1, std::lround(distance(a, b) / h));
    for (int k = 1; k <= n_sub; ++k) {
      int cur;
      if (k == n_sub) {
        const size_t nxt = (s + 1) % n_seg;
        if (corner_id[nxt] < 0) {
          corner_id[nxt] = static_cast<int>(bs.pts.size());
          bs.pts.push_back(b);
          bs.labels.emplace_back();
        }
        cur = corner_id[nxt];
      } else {
        cur = static_cast<int>(bs.pts.size());
        bs.pts.push_back(a + (static_cast<double>(k) / n_sub) * (b - a));
        bs.labels.emplace_back();
      }
      bs.labels[cur].insert(label);
      bs.chords.emplace(edge_key(prev, cur), BoundarySetup::Chord{label, -1});
      prev = cur;
    }
  }

  for (size_t ci = 0; ci < bs.circles.size(); ++ci) {
    const CircleSpec& c = bs.circles[ci];
    const std::string label = "inclusion" + std::to_string(ci);
    const int m = std::max<int>(12, std::lround(2.0 * std::numbers::pi * c.radius / h));
    const int first = static_cast<int>(bs.pts.size());
    for (int k = 0; k < m; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / m;
      bs.pts.push_back({c.center.x + c.radius * std::cos(theta),
                        c.center.y + c.radius * std::sin(theta)});
      bs.labels.push_back({label});
    }
    for (int k = 0; k < m; ++k) {
      bs.chords.emplace(edge_key(first + k, first + (k + 1) % m),
                        BoundarySetup::Chord{label, static_cast<int>(ci)});
    }
    bs.seeds.push_back(c.center);
  }
  return bs;
}

double unit_double(std::mt19937& rng) { return rng() * (1.0 / 4294967296.0); }

std::vector<Point2> interior_candidates(const BoundarySetup& bs, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Point2> out;
  const double h = bs.h;
  const double dy = h * std::sqrt(3.0) / 2.0;
  for (int j = 1; j * dy < 1.0; ++j) {
    const double x0 = (j % 2 == 1) ? 0.5 * h : h;
    for (double x = x0; x < 1.0; x += h) {
      const double jx = (unit_double(rng) - 0.5) * 0.12 * h;
      const double jy = (unit_double(rng) - 0.5) * 0.12 * h;
      const Point2 p{x + jx, j * dy + jy};
      if (bs.inside(p) && bs.clear_of_boundary(p, 0.6 * h)) out.push_back(p);
    }
  }
  return out;
}

// Drops triangles outside the domain, then checks that the triangulation
// conforms: every boundary chord is an edge of exactly one surviving
// triangle, nothing else sits on the boundary, and no point is orphaned.
// Hole seeds (indices [seed_begin, seed_end)) must come out the other way
// around: culling removes their fans entirely.
std::optional<std::vector<Tri>> cull_and_check(const BoundarySetup& bs,
                                               const std::vector<Point2>& pts,
                                               std::vector<Tri> tris, int seed_begin,
                                               int seed_end) {
  std::vector<Tri> alive;
  for (const Tri& t : tris) {
    const Point2 centroid =
        (1.0 / 3.0) * (pts[t.a] + pts[t.b] + pts[t.c]);
    if (bs.inside(centroid)) alive.push_back(t);
  }

  const double min_area2 = 0.01 * bs.h * bs.h;
  std::vector<char> used(pts.size(), 0);
  std::map<EdgeKey, int> edge_use;
  for (const Tri& t : alive) {
    if (signed_area2(pts[t.a], pts[t.b], pts[t.c]) < min_area2) return std::nullopt;
    used[t.a] = used[t.b] = used[t.c] = 1;
    ++edge_use[edge_key(t.a, t.b)];
    ++edge_use[edge_key(t.b, t.c)];
    ++edge_use[edge_key(t.c, t.a)];
  }
  for (int v = 0; v < static_cast<int>(used.size()); ++v) {
    const bool seed = v >= seed_begin && v < seed_end;
    if (static_cast<bool>(used[v]) == seed) return std::nullopt;
  }
  for (const auto& [key, chord] : bs.chords) {
    auto it = edge_use.find(key);
    if (it == edge_use.end() || it->second != 1) return std::nullopt;
  }
  for (const auto& [key, count] : edge_use) {
    if (count == 1 && !bs.chords.count(key)) return std::nullopt;
    if (count > 2) return std::nullopt;
  }
  return alive;
}

void smooth_interior(const BoundarySetup& bs, std::vector<Point2>& pts, int n_boundary,
                     const std::vector<Tri>& tris) {
  std::vector<std::set<int>> nbrs(pts.size());
  for (const Tri& t : tris) {
    const int v[3] = {t.a, t.b, t.c};
    for (int i = 0; i < 3; ++i) {
      nbrs[v[i]].insert(v[(i + 1) % 3]);
      nbrs[v[i]].insert(v[(i + 2) % 3]);
    }
  }
  std::vector<Point2> next = pts;
  for (size_t v = n_boundary; v < pts.size(); ++v) {
    if (nbrs[v].empty()) continue;
    Point2 avg{0.0, 0.0};
    for (int u : nbrs[v]) avg = avg + pts[u];
    avg = (1.0 / static_cast<double>(nbrs[v].size())) * avg;
    if (bs.inside(avg) && bs.clear_of_boundary(avg, 0.45 * bs.h)) next[v] = avg;
  }
  pts.swap(next);
}

std::optional<Mesh> attempt_unstructured(const BoundarySetup& bs, unsigned seed) {
  std::vector<Point2> pts = bs.pts;
  const int nb = static_cast<int>(pts.size());
  const int ns = static_cast<int>(bs.seeds.size());
  pts.insert(pts.end(), bs.seeds.begin(), bs.seeds.end());
  const std::vector<Point2> cand = interior_candidates(bs, seed);
  pts.insert(pts.end(), cand.begin(), cand.end());

  // Jittered interior points and hole seeds go in first so boundary
  // insertions always land in a well-shaped local triangulation.
  std::vector<int> order;
  order.reserve(pts.size());
  for (int i = nb; i < static_cast<int>(pts.size()); ++i) order.push_back(i);
  for (int i = 0; i < nb; ++i) order.push_back(i);

  auto triangulate = [&]() {
    return cull_and_check(bs, pts, bowyer_watson(pts, order), nb, nb + ns);
  };

  std::optional<std::vector<Tri>> tris = triangulate();
  if (!tris) return std::nullopt;
  for (int sweep = 0; sweep < 2; ++sweep) {
    smooth_interior(bs, pts, nb, *tris);
    tris = triangulate();
    if (!tris) return std::nullopt;
  }

  // The seeds are orphaned now; close the gap they leave in the numbering.
  const auto remap = [nb, ns](int v) { return v < nb ? v : v - ns; };

  LinearMesh lm;
  lm.verts.assign(pts.begin(), pts.begin() + nb);
  lm.verts.insert(lm.verts.end(), pts.begin() + nb + ns, pts.end());
  lm.circles = bs.circles;
  lm.vert_labels.resize(lm.verts.size());
  for (int i = 0; i < nb; ++i) lm.vert_labels[i] = bs.labels[i];
  for (const auto& [key, chord] : bs.chords) lm.edge_labels.emplace(key, chord.label);

  for (const Tri& t : *tris) {
    LinTri lt{{t.a, t.b, t.c}, -1};
    int curved_side = -1;
    for (int e = 0; e < 3; ++e) {
      auto it = bs.chords.find(edge_key(lt.v[e], lt.v[(e + 1) % 3]));
      if (it != bs.chords.end() && it->second.circle >= 0) {
        if (curved_side >= 0) return std::nullopt;  // two curved edges
        curved_side = e;
        lt.circle = it->second.circle;
      }
    }
    if (curved_side > 0) {
      std::rotate(lt.v.begin(), lt.v.begin() + curved_side, lt.v.end());
    }
    for (int& v : lt.v) v = remap(v);
    lm.tris.push_back(lt);
  }

  Mesh mesh = enrich_to_cubic(lm);
  if (!validate_mesh(mesh).ok()) return std::nullopt;
  return mesh;
}

Mesh generate_unstructured(const DomainSpec& spec, double target_h) {
  const BoundarySetup bs = build_boundary(spec, target_h);
  constexpr int kAttempts = 10;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    if (std::optional<Mesh> mesh = attempt_unstructured(bs, 1234567u + attempt)) {
      return *mesh;
    }
  }
  throw GeometryError("mesh generation failed after " + std::to_string(kAttempts) +
                      " seed attempts (target_h = " + std::to_string(target_h) + ")");
}

}  // namespace

DomainSpec DomainSpec::square() {
  DomainSpec s;
  s.variant = DomainVariant::unit_square;
  s.target_h = 0.125;
  return s;
}

DomainSpec DomainSpec::vnotch() {
  DomainSpec s;
  s.variant = DomainVariant::v_notch;
  s.notch = NotchSpec{{0.5, 0.5}, std::atan(0.3), 0.5};
  s.target_h = 0.045;
  return s;
}

DomainSpec DomainSpec::vnotch_inclusions() {
  DomainSpec s = vnotch();
  s.variant = DomainVariant::v_notch_with_inclusions;
  s.inclusions = {{{0.25, 0.72}, 0.06}, {{0.5, 0.78}, 0.06}, {{0.75, 0.72}, 0.06}};
  s.target_h = 0.05;
  return s;
}

Mesh generate_square_mesh(int n_elements) {
  int k = 0;
  bool criss_cross = false;
  switch (n_elements) {
    case 8: k = 2; break;
    case 16: k = 2; criss_cross = true; break;
    case 32: k = 4; break;
    default:
      throw ConfigError("square mesh supports 8, 16, or 32 elements, not " +
                        std::to_string(n_elements));
  }

  LinearMesh lm;
  const auto grid = [k](int i, int j) { return j * (k + 1) + i; };
  for (int j = 0; j <= k; ++j) {
    for (int i = 0; i <= k; ++i) {
      lm.verts.push_back({static_cast<double>(i) / k, static_cast<double>(j) / k});
    }
  }
  const int center0 = static_cast<int>(lm.verts.size());
  if (criss_cross) {
    for (int j = 0; j < k; ++j) {
      for (int i = 0; i < k; ++i) {
        lm.verts.push_back({(i + 0.5) / k, (j + 0.5) / k});
      }
    }
  }

  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < k; ++i) {
      const int a = grid(i, j), b = grid(i + 1, j), c = grid(i + 1, j + 1), d = grid(i, j + 1);
      if (criss_cross) {
        const int m = center0 + j * k + i;
        lm.tris.push_back({{a, b, m}, -1});
        lm.tris.push_back({{b, c, m}, -1});
        lm.tris.push_back({{c, d, m}, -1});
        lm.tris.push_back({{d, a, m}, -1});
      } else {
        lm.tris.push_back({{a, b, c}, -1});
        lm.tris.push_back({{a, c, d}, -1});
      }
    }
  }

  // Grid coordinates are dyadic, so exact comparisons identify the sides.
  lm.vert_labels.resize(lm.verts.size());
  for (size_t v = 0; v < lm.verts.size(); ++v) {
    const Point2 p = lm.verts[v];
    if (p.x == 0.0) lm.vert_labels[v].insert("Gamma_D1");
    if (p.x == 1.0) lm.vert_labels[v].insert("Gamma_D2");
    if (p.y == 0.0) lm.vert_labels[v].insert("Gamma_D3");
    if (p.y == 1.0) lm.vert_labels[v].insert("Gamma_D4");
  }
  for (int t = 0; t < k; ++t) {
    lm.edge_labels.emplace(edge_key(grid(0, t), grid(0, t + 1)), "Gamma_D1");
    lm.edge_labels.emplace(edge_key(grid(k, t), grid(k, t + 1)), "Gamma_D2");
    lm.edge_labels.emplace(edge_key(grid(t, 0), grid(t + 1, 0)), "Gamma_D3");
    lm.edge_labels.emplace(edge_key(grid(t, k), grid(t + 1, k)), "Gamma_D4");
  }
  return enrich_to_cubic(lm);
}

Mesh generate_vnotch_mesh(const DomainSpec& spec, double target_h) {
  if (spec.variant != DomainVariant::v_notch) {
    throw ConfigError("generate_vnotch_mesh requires the v_notch domain variant");
  }
  if (!spec.inclusions.empty()) {
    throw ConfigError("v_notch domain takes no inclusions");
  }
  return generate_unstructured(spec, target_h);
}

Mesh generate_vnotch_inclusions_mesh(const DomainSpec& spec, double target_h) {
  if (spec.variant != DomainVariant::v_notch_with_inclusions) {
    throw ConfigError(
        "generate_vnotch_inclusions_mesh requires the v_notch_with_inclusions variant");
  }
  if (spec.inclusions.empty()) {
    throw ConfigError("v_notch_with_inclusions requires at least one inclusion");
  }
  return generate_unstructured(spec, target_h);
}

}  // namespace slfem
