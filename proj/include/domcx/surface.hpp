#pragma once

// Combinatorial model of a compact orientable surface S_{g,b}.
//
// The surface is encoded as an ideal triangulation whose vertices are the
// boundary components (one distinguished puncture per boundary circle).
// Truncating every ideal vertex turns each triangle into a hexagon with
// three long sides (the triangulation edges) and three short sides lying
// on the boundary circles; curves cross only the long sides, arcs end on
// the short ones.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace domcx {

using json = nlohmann::json;

struct SurfaceError : std::runtime_error {
  explicit SurfaceError(const std::string& what) : std::runtime_error(what) {}
};

struct SideRef {
  int tri = -1;
  int side = -1;
  bool operator==(const SideRef&) const = default;
  auto operator<=>(const SideRef&) const = default;
};

// Corner j of a triangle sits at vertex slot j, between the incoming side
// (j+2)%3 and the outgoing side j.
struct CornerRef {
  int tri = -1;
  int corner = -1;
  bool operator==(const CornerRef&) const = default;
  auto operator<=>(const CornerRef&) const = default;
};

struct Triangle {
  // vert[i] is the vertex at corner i; side i runs vert[i] -> vert[(i+1)%3].
  std::array<int, 3> vert{-1, -1, -1};
  // glue[i]: the side glued to side i (orientation-reversing).
  std::array<SideRef, 3> glue{};
};

struct Edge {
  // slot[0] is the canonical orientation of the edge; slot[1] sees the
  // mark order reversed.
  std::array<SideRef, 2> slot{};
  int tail = -1;  // vertex at the start of slot[0]'s traversal
  int head = -1;
};

class Surface {
 public:
  int genus = 0;
  int boundary_count = 0;
  std::vector<Triangle> tris;

  // Derived tables.
  std::vector<Edge> edges;
  // side_edge[t][s] = (edge id, slot index of (t,s) within that edge).
  std::vector<std::array<std::pair<int, int>, 3>> side_edge;
  // vertex_sectors[v] = cyclic sequence of corners around boundary circle v,
  // in the direction induced by crossing each corner's outgoing side.
  std::vector<std::vector<CornerRef>> vertex_sectors;
  // sector_pos[t][c] = position of corner (t,c) within vertex_sectors[vert].
  std::vector<std::array<int, 3>> sector_pos;

  int num_edges() const { return static_cast<int>(edges.size()); }
  int num_triangles() const { return static_cast<int>(tris.size()); }
  int num_vertices() const { return boundary_count; }

  int euler_characteristic() const { return 2 - 2 * genus - boundary_count; }

  int vertex_at(CornerRef c) const { return tris[c.tri].vert[c.corner]; }

  SideRef glued(SideRef s) const { return tris[s.tri].glue[s.side]; }

  int edge_of(SideRef s) const { return side_edge[s.tri][s.side].first; }
  int slot_of(SideRef s) const { return side_edge[s.tri][s.side].second; }
  SideRef side_of(int edge, int slot) const { return edges[edge].slot[slot]; }

  // Rotating around the vertex at corner (t,j) by crossing the outgoing
  // side j.
  CornerRef next_sector(CornerRef c) const {
    SideRef p = glued({c.tri, c.corner});
    return {p.tri, (p.side + 1) % 3};
  }

  void finalize() {
    build_edges();
    build_sectors();
    validate();
  }

  json to_json() const {
    json tj = json::array();
    for (const auto& t : tris) {
      json g = json::array();
      for (int s = 0; s < 3; ++s) g.push_back({t.glue[s].tri, t.glue[s].side});
      tj.push_back({{"vertices", t.vert}, {"glue", g}});
    }
    json labels = json::array();
    for (int v = 0; v < boundary_count; ++v) labels.push_back(v + 1);
    return json{{"schema", "domcx.surface/1"},
                {"genus", genus},
                {"boundary_count", boundary_count},
                {"euler_characteristic", euler_characteristic()},
                {"boundary_labels", labels},
                {"triangulation",
                 {{"num_edges", num_edges()},
                  {"num_triangles", num_triangles()},
                  {"triangles", tj}}}};
  }

 private:
  void build_edges() {
    edges.clear();
    side_edge.assign(tris.size(), {std::pair<int, int>{-1, -1},
                                   std::pair<int, int>{-1, -1},
                                   std::pair<int, int>{-1, -1}});
    for (int t = 0; t < num_triangles(); ++t) {
      for (int s = 0; s < 3; ++s) {
        if (side_edge[t][s].first >= 0) continue;
        SideRef here{t, s};
        SideRef there = glued(here);
        if (there.tri < 0 || there.tri >= num_triangles() || there.side < 0 ||
            there.side >= 3)
          throw SurfaceError("invalid gluing target");
        if (glued(there) != here) throw SurfaceError("gluing not involutive");
        if (there == here) throw SurfaceError("side glued to itself");
        int id = static_cast<int>(edges.size());
        Edge e;
        e.slot = {here, there};
        e.tail = tris[t].vert[s];
        e.head = tris[t].vert[(s + 1) % 3];
        edges.push_back(e);
        side_edge[t][s] = {id, 0};
        side_edge[there.tri][there.side] = {id, 1};
      }
    }
  }

  void build_sectors() {
    int V = 0;
    for (const auto& t : tris)
      for (int v : t.vert) V = std::max(V, v + 1);
    if (V != boundary_count)
      throw SurfaceError("vertex ids do not match boundary count");
    vertex_sectors.assign(V, {});
    sector_pos.assign(tris.size(), {-1, -1, -1});
    std::set<std::pair<int, int>> seen;
    for (int t = 0; t < num_triangles(); ++t) {
      for (int c = 0; c < 3; ++c) {
        if (seen.count({t, c})) continue;
        int v = tris[t].vert[c];
        if (!vertex_sectors[v].empty())
          throw SurfaceError("two rotation orbits share a vertex id");
        CornerRef start{t, c};
        CornerRef cur = start;
        do {
          if (vertex_at(cur) != v)
            throw SurfaceError("inconsistent vertex around a puncture");
          sector_pos[cur.tri][cur.corner] =
              static_cast<int>(vertex_sectors[v].size());
          vertex_sectors[v].push_back(cur);
          seen.insert({cur.tri, cur.corner});
          cur = next_sector(cur);
        } while (cur != start);
      }
    }
    for (int v = 0; v < V; ++v)
      if (vertex_sectors[v].empty())
        throw SurfaceError("boundary label with no sectors");
  }

  void validate() const {
    // Gluing endpoints must match crosswise (orientation-reversing).
    for (int t = 0; t < num_triangles(); ++t) {
      for (int s = 0; s < 3; ++s) {
        SideRef p = tris[t].glue[s];
        int tail = tris[t].vert[s];
        int head = tris[t].vert[(s + 1) % 3];
        int ptail = tris[p.tri].vert[p.side];
        int phead = tris[p.tri].vert[(p.side + 1) % 3];
        if (tail != phead || head != ptail)
          throw SurfaceError("gluing does not reverse orientation");
      }
    }
    int V = boundary_count, E = num_edges(), F = num_triangles();
    if (V - E + F != 2 - 2 * genus)
      throw SurfaceError("Euler characteristic mismatch");
    // Connectivity of the triangulation.
    std::vector<int> stack{0}, seen(tris.size(), 0);
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      for (int s = 0; s < 3; ++s) {
        int u = tris[t].glue[s].tri;
        if (!seen[u]) {
          seen[u] = 1;
          ++count;
          stack.push_back(u);
        }
      }
    }
    if (count != num_triangles()) throw SurfaceError("triangulation not connected");
  }
};

inline int complexity(const Surface& s) { return 3 * s.genus + s.boundary_count - 4; }

inline bool admissible_for_arcs(const Surface& s) {
  return s.boundary_count >= 3 && !(s.genus == 0 && s.boundary_count == 4) &&
         complexity(s) > 0;
}

namespace detail {

// Replace triangle t = (x,y,z) by three triangles around a fresh vertex w.
inline void one_to_three(std::vector<Triangle>& tris, int t, int w) {
  Triangle old = tris[t];
  int n = static_cast<int>(tris.size());
  int x = old.vert[0], y = old.vert[1], z = old.vert[2];

  Triangle a, b, c;  // a replaces t; b, c appended at n, n+1
  a.vert = {x, y, w};
  b.vert = {y, z, w};
  c.vert = {z, x, w};

  a.glue[0] = old.glue[0];
  b.glue[0] = old.glue[1];
  c.glue[0] = old.glue[2];
  a.glue[1] = {n, 2};      // y->w  glued to  w->y
  b.glue[2] = {t, 1};
  b.glue[1] = {n + 1, 2};  // z->w  glued to  w->z
  c.glue[2] = {n, 1};
  c.glue[1] = {t, 2};      // x->w  glued to  w->x
  a.glue[2] = {n + 1, 1};

  // Repoint the outer partners.
  auto repoint = [&](SideRef outer, SideRef inner) {
    if (outer.tri == t) {
      // Partner was another side of the subdivided triangle itself; it has
      // been reassigned above, handled by the mapping below.
      return;
    }
    tris[outer.tri].glue[outer.side] = inner;
  };
  tris[t] = a;
  tris.push_back(b);
  tris.push_back(c);
  repoint(a.glue[0], {t, 0});
  repoint(b.glue[0], {n, 0});
  repoint(c.glue[0], {n + 1, 0});
  // Self-glued sides of the old triangle (possible in small models): fix
  // the inner references.
  auto fix_self = [&](SideRef& g, int old_side, SideRef now) {
    if (g.tri == t && g.side == old_side) g = now;
  };
  for (Triangle* tp : {&tris[t], &tris[n], &tris[n + 1]}) {
    fix_self(tp->glue[0], 0, {t, 0});
    fix_self(tp->glue[0], 1, {n, 0});
    fix_self(tp->glue[0], 2, {n + 1, 0});
  }
}

}  // namespace detail

// Deterministic reference triangulation of S_{g,b}. Requires b >= 1 and
// Euler characteristic 2-2g-b < 0; rejects anything else (sphere, disk,
// annulus, torus, closed surfaces).
inline Surface build_surface(int g, int b) {
  if (g < 0 || b < 0) throw SurfaceError("genus and boundary count must be nonnegative");
  if (2 - 2 * g - b >= 0)
    throw SurfaceError("no hyperbolic-type model: requires 2-2g-b < 0");
  if (b == 0)
    throw SurfaceError("closed surfaces admit no ideal triangulation with "
                       "boundary punctures");

  Surface s;
  s.genus = g;
  s.boundary_count = b;

  if (g == 0) {
    // Base: three-punctured sphere, two triangles glued along three edges.
    Triangle t0, t1;
    t0.vert = {0, 1, 2};
    t1.vert = {1, 0, 2};
    t0.glue = {SideRef{1, 0}, SideRef{1, 2}, SideRef{1, 1}};
    t1.glue = {SideRef{0, 0}, SideRef{0, 2}, SideRef{0, 1}};
    s.tris = {t0, t1};
    for (int v = 3; v < b; ++v)
      detail::one_to_three(s.tris, static_cast<int>(s.tris.size()) - 1, v);
  } else {
    // Base: genus-g surface with one puncture, fan triangulation of the
    // 4g-gon with boundary word a1 b1 a1^- b1^- ... .
    int n = 4 * g;
    // Polygon corners p_0..p_{n-1}, all identified to vertex 0.
    // Fan triangles T_i = (p_0, p_i, p_{i+1}) for i = 1..n-2.
    // Side ids: triangle index k = i-1 in 0..n-3.
    // side 0 of T_i: p0->p_i   (diagonal i, or polygon side 0 when i==1)
    // side 1 of T_i: p_i->p_{i+1} (polygon side i)
    // side 2 of T_i: p_{i+1}->p0 (diagonal i+1 reversed, or polygon side n-1
    //                             when i==n-2)
    int ntris = n - 2;
    s.tris.assign(ntris, Triangle{});
    for (int k = 0; k < ntris; ++k) s.tris[k].vert = {0, 0, 0};

    // Where does polygon side j live?  side j = (p_j -> p_{j+1}).
    auto poly_side = [&](int j) -> SideRef {
      if (j == 0) return {0, 0};
      if (j == n - 1) return {ntris - 1, 2};
      return {j - 1, 1};
    };
    // Diagonals: diagonal i (p0->p_i), i in 2..n-2: side 0 of T_i glued to
    // side 2 of T_{i-1}.
    for (int i = 2; i <= n - 2; ++i) {
      s.tris[i - 1].glue[0] = {i - 2, 2};
      s.tris[i - 2].glue[2] = {i - 1, 0};
    }
    // Polygon identifications: side 4k ~ side 4k+2 reversed, 4k+1 ~ 4k+3.
    for (int k = 0; k < g; ++k) {
      auto a0 = poly_side(4 * k), a1 = poly_side(4 * k + 2);
      auto b0 = poly_side(4 * k + 1), b1 = poly_side(4 * k + 3);
      s.tris[a0.tri].glue[a0.side] = a1;
      s.tris[a1.tri].glue[a1.side] = a0;
      s.tris[b0.tri].glue[b0.side] = b1;
      s.tris[b1.tri].glue[b1.side] = b0;
    }
    for (int v = 1; v < b; ++v)
      detail::one_to_three(s.tris, static_cast<int>(s.tris.size()) - 1, v);
  }

  s.finalize();
  return s;
}

}  // namespace domcx
