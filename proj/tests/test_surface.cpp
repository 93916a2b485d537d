#include <catch2/catch_amalgamated.hpp>

#include "domcx/surface.hpp"

using namespace domcx;

TEST_CASE("reference triangulations have the expected shape") {
  struct Row {
    int g, b, chi, edges, tris;
  };
  // E = 6g + 3b - 6, F = 4g + 2b - 4 for an ideal triangulation.
  for (Row r : {Row{0, 3, -1, 3, 2}, Row{0, 5, -3, 9, 6}, Row{0, 6, -4, 12, 8},
                Row{1, 1, -1, 3, 2}, Row{1, 3, -3, 9, 6}, Row{2, 1, -3, 9, 6}}) {
    Surface s = build_surface(r.g, r.b);
    INFO("S_{" << r.g << "," << r.b << "}");
    CHECK(s.euler_characteristic() == r.chi);
    CHECK(s.num_edges() == r.edges);
    CHECK(s.num_triangles() == r.tris);
    CHECK(s.num_vertices() == r.b);
    // Every boundary label appears, each with a nonempty sector cycle.
    int total_sectors = 0;
    for (int v = 0; v < r.b; ++v) {
      CHECK(!s.vertex_sectors[v].empty());
      total_sectors += static_cast<int>(s.vertex_sectors[v].size());
    }
    CHECK(total_sectors == 3 * s.num_triangles());
  }
}

TEST_CASE("build_surface is deterministic") {
  Surface a = build_surface(1, 3);
  Surface b = build_surface(1, 3);
  REQUIRE(a.to_json() == b.to_json());
}

TEST_CASE("build_surface rejects degenerate types") {
  CHECK_THROWS_AS(build_surface(0, 0), SurfaceError);
  CHECK_THROWS_AS(build_surface(0, 1), SurfaceError);
  CHECK_THROWS_AS(build_surface(0, 2), SurfaceError);
  CHECK_THROWS_AS(build_surface(1, 0), SurfaceError);
  CHECK_THROWS_AS(build_surface(2, 0), SurfaceError);
  CHECK_THROWS_AS(build_surface(-1, 5), SurfaceError);
}

TEST_CASE("complexity and arc admissibility") {
  CHECK(complexity(build_surface(0, 5)) == 1);
  CHECK(complexity(build_surface(1, 3)) == 2);
  CHECK(complexity(build_surface(0, 4)) == 0);

  CHECK(admissible_for_arcs(build_surface(0, 5)));
  CHECK(admissible_for_arcs(build_surface(1, 3)));
  CHECK_FALSE(admissible_for_arcs(build_surface(0, 4)));
  CHECK_FALSE(admissible_for_arcs(build_surface(0, 3)));
  CHECK_FALSE(admissible_for_arcs(build_surface(1, 1)));
  CHECK_FALSE(admissible_for_arcs(build_surface(1, 2)));
}

TEST_CASE("sector rotation is a bijection on corners") {
  Surface s = build_surface(1, 3);
  std::set<std::pair<int, int>> hit;
  for (int v = 0; v < s.num_vertices(); ++v) {
    for (CornerRef c : s.vertex_sectors[v]) {
      CHECK(s.vertex_at(c) == v);
      CHECK(!hit.count({c.tri, c.corner}));
      hit.insert({c.tri, c.corner});
    }
  }
  CHECK(static_cast<int>(hit.size()) == 3 * s.num_triangles());
}

TEST_CASE("chain edges between consecutive labels exist") {
  // The wrap construction relies on the reference scheme connecting
  // consecutive punctures by a triangulation edge.
  for (auto [g, b] : std::vector<std::pair<int, int>>{{0, 5}, {0, 6}, {1, 3}}) {
    Surface s = build_surface(g, b);
    for (int v = 0; v + 1 < b; ++v) {
      bool found = false;
      for (const Edge& e : s.edges)
        if ((e.tail == v && e.head == v + 1) || (e.tail == v + 1 && e.head == v))
          found = true;
      INFO("S_{" << g << "," << b << "} edge " << v << "-" << v + 1);
      CHECK(found);
    }
  }
}
