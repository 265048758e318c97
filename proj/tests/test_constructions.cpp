#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "udk/arrangement.h"
#include "udk/constructions.h"

using namespace udk;

namespace {

std::set<std::pair<Point, Point>, bool (*)(const std::pair<Point, Point>&, const std::pair<Point, Point>&)>
segment_set(const Drawing& d) {
  auto less = [](const std::pair<Point, Point>& a, const std::pair<Point, Point>& b) {
    PointRepLess l;
    if (l(a.first, b.first) || l(b.first, a.first)) return l(a.first, b.first);
    return l(a.second, b.second);
  };
  std::set<std::pair<Point, Point>, bool (*)(const std::pair<Point, Point>&, const std::pair<Point, Point>&)> out(less);
  for (const auto& e : d.edges) {
    Point p = d.vertices[e.u], q = d.vertices[e.v];
    if (PointRepLess{}(q, p)) std::swap(p, q);
    out.emplace(p, q);
  }
  return out;
}

}  // namespace

TEST_CASE("integer square roots") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 2000; ++i) {
    std::int64_t x = static_cast<std::int64_t>(rng() % 4'000'000'000'000ULL);
    if (i < 200) x = i;
    std::int64_t f = isqrt_floor(x), c = isqrt_ceil(x);
    CHECK(f * f <= x);
    CHECK((f + 1) * (f + 1) > x);
    CHECK(c * c >= x);
    CHECK((c == 0 || (c - 1) * (c - 1) < x));
  }
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-8, 2) == -4);
}

TEST_CASE("matchstick maximum for small n") {
  const std::int64_t expect[] = {3, 5, 7, 9, 12};
  for (int n = 3; n <= 7; ++n) CHECK(u0(n) == expect[n - 3]);
  CHECK(u0_printed(4) == 6);
  CHECK(u0(29) == 68);
  CHECK(u0_printed(29) == 69);
  CHECK(u0(179) == 490);
}

TEST_CASE("rook block") {
  Drawing d = rook_block();
  CHECK(d.n() == 9);
  CHECK(d.e() == 18);
  CHECK(validate_drawing(d).valid());
  CHECK(d.vertices[0] == Point{0, 0});
  QField far = 0;
  for (const auto& p : d.vertices) far = std::max(far, squared_norm(p));
  CHECK(far == QField(2, 1));
  auto x = crossing_report(d);
  CHECK(x.max_crossings_per_edge <= 2);
  CHECK(x == oracle_crossings(d));
  // A rotation that is not a unit vector is refused.
  CHECK_THROWS_AS(rook_block(QField(1), QField(1)), ConstructionError);
  // Zero rotation puts b on top of a: coincident vertices.
  CHECK_THROWS_AS(rook_block(QField(1), QField(0)), ConstructionError);
}

TEST_CASE("dodecagon") {
  Drawing d = dodecagon();
  CHECK(d.n() == 29);
  CHECK(d.e() == 72);
  CHECK(dashed_edges(d).size() == 4);
  auto x = crossing_report(d);
  CHECK(x.max_crossings_per_edge <= 2);
  CHECK(x == oracle_crossings(d));

  auto m = outer_metrics(d);
  CHECK(m.perimeter == 12);
  CHECK(m.area == QField(6, 3));
  CHECK(m.isoperimetric_holds());

  // The outer walk visits twelve vertices on the circumcircle.
  Planarization p = planarize(d);
  FaceStructure f = trace_faces(p.graph, p.drawing);
  REQUIRE(f.regions[0].walks.size() == 1);
  const auto& walk = f.walks[f.regions[0].walks[0]];
  CHECK(walk.halfedges.size() == 12);
  for (int h : walk.halfedges) {
    int v = f.origin(p.graph, h);
    REQUIRE(p.graph.vertex_of[v] >= 0);
    CHECK(squared_norm(p.graph.points[v]) == QField(2, 1));
  }
}

TEST_CASE("dodecagon grid counts") {
  for (int k = 1; k <= 6; ++k) {
    CAPTURE(k);
    Drawing g = dodecagon_grid(k);
    CHECK(g.n() == 69 * k * k - 57 * k + 17);
    CHECK(g.e() == 207 * k * k - 195 * k + 60);
    auto p = params_for_layers(k);
    CHECK(p.h == 3 * k * k - 3 * k + 1);
    CHECK(29 * p.h - 2 * p.c1 == g.n());
    CHECK(72 * p.h - p.c1 + p.c2 == g.e());
    CHECK(layer_floor(g.n()) == g.e());
  }
  CHECK(segment_set(dodecagon_grid(1)) == segment_set(dodecagon()));
  CHECK_THROWS_AS(dodecagon_grid(0), PreconditionError);
}

TEST_CASE("gray edges are the unit pairs a 2-plane augmentation adds") {
  for (int k = 1; k <= 3; ++k) {
    Drawing g = dodecagon_grid(k);
    auto dashed = dashed_edges(g);
    Drawing bare = g;
    bare.meta.clear();
    bare.edges.clear();
    std::set<int> skip(dashed.begin(), dashed.end());
    for (int i = 0; i < g.e(); ++i) {
      if (!skip.count(i)) bare.edges.push_back(g.edges[i]);
    }
    Drawing again = augment_2planar(bare, 2);
    CHECK(again.edges == g.edges);
  }
}

TEST_CASE("grid drawings are 2-plane by both crossing routes") {
  for (int k = 1; k <= 3; ++k) {
    Drawing g = dodecagon_grid(k);
    auto x = crossing_report(g);
    CHECK(x.max_crossings_per_edge <= 2);
    CHECK(x == oracle_crossings(g));
  }
}

TEST_CASE("spiral construction") {
  CHECK(spiral_construction(29).e() == 72);
  CHECK(spiral_construction(179).e() == 498);
  CHECK(spiral_construction(204).e() == 498 + 71);
  CHECK(spiral_construction(893).e() == 2592);
  CHECK(spiral_construction(204).meta.at("A") == "25");
  CHECK_THROWS_AS(spiral_construction(28), PreconditionError);

  int prev = 0;
  for (int n = 29; n <= 420; n += 3) {
    Drawing s = spiral_construction(n);
    CHECK(s.n() == n);
    CHECK(s.e() >= prev);
    prev = s.e();
    if (n >= 179) CHECK(s.e() >= spiral_floor(n));
  }
  // Third layer: the first dodecagon takes 25 vertices and adds 71 edges,
  // the corner after it the same, the next side position 23 and 69.
  CHECK(spiral_construction(179 + 25 + 25).e() == 498 + 71 + 71);
  CHECK(spiral_construction(179 + 25 + 25 + 23).e() == 498 + 71 + 71 + 69);
}

TEST_CASE("full layers beat the matchstick maximum") {
  for (int k = 1; k <= 10; ++k) {
    std::int64_t n = grid_vertices(k), e = grid_edges(k);
    CHECK(3 * n - e == 24 * k - 9);
    CHECK(e > u0(n));
    CHECK(24 * k - 9 < isqrt_floor(12 * n - 3));
  }
}

TEST_CASE("triangular lattice hexagon") {
  CHECK(triangular_hexagon(1).e() == 0);
  CHECK(triangular_hexagon(3).e() == 3);
  CHECK(triangular_hexagon(4).e() == 5);
  CHECK(triangular_hexagon(7).e() == 12);
  for (int n = 3; n <= 200; ++n) {
    Drawing h = triangular_hexagon(n);
    CHECK(h.e() == u0(n));
    if (n % 25 == 0) {
      CHECK(validate_drawing(h).valid());
      CHECK(crossing_report(h).crossings.empty());
    }
  }
}

TEST_CASE("shifted lattice") {
  Drawing six = shifted_lattice(6);
  CHECK(six.e() == 9);
  CHECK(shifted_lattice(14).e() == 31);
  for (int n = 6; n <= 200; n += 14) {
    Drawing s = shifted_lattice(n);
    CHECK(crossing_report(s).max_crossings_per_edge <= 3);
  }
  CHECK_THROWS_AS(shifted_lattice(7), PreconditionError);
  CHECK_THROWS_AS(shifted_lattice(8, Point{QField(1), QField(1)}), ConstructionError);
}

TEST_CASE("bound table") {
  auto t = bound_table(179);
  CHECK(t.u0 == 490);
  CHECK(t.u2_upper == 708);
  CHECK(t.spiral_edges.value() == 498);
  CHECK(t.margin.value() == 8);
  auto s = bound_table(29);
  CHECK(s.u0 == 68);
  CHECK(s.u0_printed == 69);
  CHECK(s.spiral_edges.value() == 72);
  CHECK_FALSE(s.spiral_floor.has_value());
  CHECK(bound_table(4).hexagon_edges.value() == 5);
}
