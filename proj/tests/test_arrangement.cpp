#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "support/shapes.h"
#include "udk/arrangement.h"

using namespace udk;
using namespace udk::testing;

namespace {

std::vector<int> sizes_of(const std::vector<Cell>& cells) {
  std::vector<int> s;
  for (const auto& c : cells) s.push_back(c.size);
  std::sort(s.begin(), s.end());
  return s;
}

int unbounded_count(const std::vector<Cell>& cells) {
  return static_cast<int>(std::count_if(cells.begin(), cells.end(), [](const Cell& c) { return !c.bounded; }));
}

}  // namespace

TEST_CASE("crossings of small drawings") {
  auto x = crossing_report(unit_x());
  CHECK(x.crossings.size() == 1);
  CHECK(x.max_crossings_per_edge == 1);
  CHECK(x.crossings[0].point == pt(0, 0));
  CHECK(x.crossings[0].t1 == QField::ratio(1, 2));
  CHECK(x == oracle_crossings(unit_x()));

  auto t = crossing_report(unit_triangle());
  CHECK(t.crossings.empty());
  CHECK(t == oracle_crossings(unit_triangle()));
}

TEST_CASE("touching edges are degenerate") {
  Drawing d;
  // T shape: the end of the vertical edge sits on the horizontal one.
  d.vertices = {pt(0, 0), pt(1, 0), pt(1, 0, 0, 0, 2), pt(1, 0, 2, 0, 2)};
  d.edges = {{0, 1}, {2, 3}};
  CHECK_THROWS_AS(crossing_report(d), DegenerateInput);
  CHECK_THROWS_AS(oracle_crossings(d), DegenerateInput);
}

TEST_CASE("cell sizes of small drawings") {
  auto edge = cell_decomposition(planarize(single_edge()));
  CHECK(sizes_of(edge) == std::vector<int>{4});

  auto tri = cell_decomposition(planarize(unit_triangle()));
  CHECK(sizes_of(tri) == std::vector<int>{6, 6});
  CHECK(unbounded_count(tri) == 1);

  auto x = cell_decomposition(planarize(unit_x()));
  CHECK(sizes_of(x) == std::vector<int>{12});
  CHECK(x[0].crossings.size() == 1);
}

TEST_CASE("isolated vertex inside a triangle adds one to the cell") {
  Drawing d = unit_triangle();
  d.vertices.push_back(pt(3, 0, 0, 1, 6));  // centroid (1/2, sqrt3/6)
  REQUIRE(validate_drawing(d).valid());
  auto cells = cell_decomposition(planarize(d));
  CHECK(sizes_of(cells) == std::vector<int>{6, 7});
  for (const auto& c : cells) {
    if (c.bounded) CHECK(c.size == 7);
  }
}

TEST_CASE("nested components find their enclosing cell") {
  // Triangle of side 3 built from unit pieces is not needed: a unit triangle
  // far inside a large polygon is enough. Use a regular hexagon of unit
  // triangles around the origin and a lone edge outside.
  Drawing d = unit_triangle();
  d.vertices.push_back(pt(5, 0));
  d.vertices.push_back(pt(6, 0));
  d.edges.push_back({3, 4});
  auto p = planarize(d);
  auto f = trace_faces(p.graph, p.drawing);
  CHECK(f.components == 2);
  CHECK(f.regions.size() == 2);
  CHECK(f.regions[0].walks.size() == 2);
  auto cells = cell_decomposition(p, f);
  CHECK(sizes_of(cells) == std::vector<int>{6, 10});
}

TEST_CASE("density formula examples") {
  auto tri = density_check(unit_triangle(), 3);
  CHECK(tri.holds);
  CHECK(tri.rhs == 3);
  CHECK(tri.slack == 0);

  auto x = density_check(unit_x(), 3);
  CHECK(x.rhs == 2);
  CHECK(x.holds);

  Drawing split = unit_triangle();
  split.vertices.push_back(pt(5, 0));
  CHECK_THROWS_AS(density_check(split, 3), PreconditionError);
}

TEST_CASE("rhombus gadget: two size-5 cells at one crossing") {
  Drawing d = rhombus_gadget();
  auto report = small_cell_classifier(d);
  CHECK(report.c5 == 2);
  CHECK(report.histogram[0] == 2);
  CHECK(report.only_type_a);
  CHECK(report.unclassifiable.empty());

  auto audit = crossing_incidence_audit(d);
  CHECK(audit.x2 == 1);
  CHECK(audit.x1 == 0);
  REQUIRE(audit.triangles.size() == 1);
  CHECK(audit.triangles[0].vertices == std::array<int, 3>{0, 1, 2});
  CHECK(audit.claims_hold);
}

TEST_CASE("incidence audit needs a 1-plane drawing") {
  Drawing d;
  // Horizontal unit edge crossed by two vertical unit edges.
  d.vertices = {pt(0, 0), pt(1, 0), pt(1, 0, -1, 0, 4), pt(1, 0, 3, 0, 4), pt(3, 0, -1, 0, 4),
                pt(3, 0, 3, 0, 4)};
  d.edges = {{0, 1}, {2, 3}, {4, 5}};
  CHECK(crossing_report(d).max_crossings_per_edge == 2);
  CHECK_THROWS_AS(crossing_incidence_audit(d), PreconditionError);
}

TEST_CASE("outer metrics") {
  auto tri = outer_metrics(unit_triangle());
  CHECK(tri.perimeter == 3);
  CHECK(tri.area == QField(0, mpq_class(1, 4)));
  CHECK(tri.isoperimetric_holds());

  auto edge = outer_metrics(single_edge());
  CHECK(edge.perimeter == 2);
  CHECK(edge.area == 0);
  CHECK(edge.isoperimetric_holds());
}

TEST_CASE("corpus properties") {
  CorpusOptions opt;
  opt.pendants = 10;
  auto corpus = random_corpus(7, 60, opt);
  for (const auto& d : corpus) {
    CAPTURE(serialize_drawing(d));
    REQUIRE(validate_drawing(d).valid());
    auto fast = crossing_report(d);
    CHECK(fast == oracle_crossings(d));
    CHECK(fast.max_crossings_per_edge <= 2);

    auto p = planarize(d);
    auto f = trace_faces(p.graph, p.drawing);
    auto cells = cell_decomposition(p, f);
    int segs = static_cast<int>(p.graph.segments.size());
    for (int e = 0; e < d.e(); ++e) {
      CHECK(static_cast<int>(p.edge_segments[e].size()) == fast.per_edge[e] + 1);
    }
    int inc = 0, total = 0;
    for (const auto& c : cells) {
      inc += c.segment_incidences;
      total += c.size;
    }
    CHECK(inc == 2 * segs);
    CHECK(total >= 2 * segs + d.n());
    CHECK(unbounded_count(cells) == 1);
    // Euler: nodes - segments + regions = 1 + components.
    int nodes = static_cast<int>(p.graph.points.size());
    CHECK(nodes - segs + static_cast<int>(cells.size()) == 1 + f.components);

    if (is_connected(p)) {
      for (int t : {2, 3, 4}) {
        auto r = density_check(d, p, cells, t);
        CHECK(r.holds);
      }
    }
  }
}

TEST_CASE("1-plane corpus has only type-a small cells") {
  CorpusOptions opt;
  opt.max_crossings = 1;
  opt.pendants = 10;
  for (const auto& d : random_corpus(11, 40, opt)) {
    CAPTURE(serialize_drawing(d));
    auto r = small_cell_classifier(d);
    CHECK(r.one_plane);
    CHECK(r.only_type_a);
    auto a = crossing_incidence_audit(d);
    CHECK(a.claims_hold);
  }
}
