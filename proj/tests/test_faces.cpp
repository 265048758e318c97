#include <algorithm>
#include <set>

#include "doctest.h"
#include "support/shapes.h"
#include "udk/faces.h"

using namespace udk;
using namespace udk::testing;

namespace {

int edge_index(const Drawing& d, int u, int v) {
  auto it = std::find(d.edges.begin(), d.edges.end(), Edge(u, v));
  REQUIRE(it != d.edges.end());
  return static_cast<int>(it - d.edges.begin());
}

}  // namespace

TEST_CASE("gadgets are valid 2-plane drawings") {
  for (const Drawing& d : {type4_gadget(), type1_gadget()}) {
    CHECK(validate_drawing(d).valid());
    CHECK(crossing_report(d).is_k_plane(2));
  }
}

TEST_CASE("split of crossing-free and crossing drawings") {
  auto tri = plane_subgraph(unit_triangle());
  CHECK(tri.size0() == 3);
  CHECK(tri.e1.empty());

  for (auto mode : {SplitMode::exact, SplitMode::greedy}) {
    SplitOptions opt;
    opt.mode = mode;
    auto x = plane_subgraph(unit_x(), opt);
    CHECK(x.e0 == std::vector<int>{0});
    CHECK(x.e1 == std::vector<int>{1});
  }
  CHECK_THROWS_AS(make_split(unit_x(), {0, 1}), PreconditionError);
}

TEST_CASE("exact split beats greedy on a path of conflicts") {
  // The horizontal edge has the smallest index and crosses both verticals:
  // greedy keeps it alone, the exact search keeps the two verticals.
  Drawing d;
  d.vertices = {pt(0, 0), pt(1, 0), pt(1, 0, -1, 0, 4), pt(1, 0, 3, 0, 4), pt(3, 0, -1, 0, 4),
                pt(3, 0, 3, 0, 4)};
  d.edges = {{0, 1}, {2, 3}, {4, 5}};
  REQUIRE(validate_drawing(d).valid());
  SplitOptions exact;
  exact.repair = false;
  SplitOptions greedy = exact;
  greedy.mode = SplitMode::greedy;
  CHECK(plane_subgraph(d, exact).e0 == std::vector<int>{1, 2});
  CHECK(plane_subgraph(d, greedy).e0 == std::vector<int>{0});
  exact.size_limit = 2;
  CHECK_THROWS_AS(plane_subgraph(d, exact), SizeLimitError);
}

TEST_CASE("face census of small plane graphs") {
  auto fd = face_decomposition(unit_triangle(), plane_subgraph(unit_triangle()));
  CHECK(fd.faces.size() == 2);
  CHECK(fd.stats.f3 == 2);
  CHECK(fd.stats.f_ge5 == 0);

  Drawing rhombus;
  rhombus.vertices = {pt(0, 0), pt(1, 0), pt(1, 0, 0, 1, 2), pt(3, 0, 0, 1, 2)};
  rhombus.edges = {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}};
  auto r = face_decomposition(rhombus, plane_subgraph(rhombus));
  CHECK(r.stats.f3 == 2);
  CHECK(r.stats.f_ge5 == 0);
  CHECK(r.faces[0].size == 4);

  Drawing dotted = unit_triangle();
  dotted.vertices.push_back(pt(3, 0, 0, 1, 6));
  auto s = face_decomposition(dotted, plane_subgraph(dotted));
  int inner = 0;
  for (const auto& f : s.faces) {
    if (!f.bounded) continue;
    ++inner;
    CHECK(f.m == 2);
    CHECK(f.size == 3);
    CHECK(f.t == 3);
  }
  CHECK(inner == 1);
}

TEST_CASE("bound checks on a triangle") {
  auto g = gt_bound_check(unit_triangle(), plane_subgraph(unit_triangle()));
  CHECK(g.p1);
  CHECK(g.p2);
}

TEST_CASE("halfedges of the unit X") {
  Drawing x = unit_x();
  auto s = plane_subgraph(x);
  auto hr = halfedge_extraction(x, s);
  REQUIRE(hr.halfedges.size() == 2);
  CHECK(hr.halfedges[0].edge == 1);
  CHECK(hr.halfedges[0].first_hit == 0);
  CHECK(hr.per_face[0] == 2);
  CHECK(halfedge_extraction(unit_triangle(), plane_subgraph(unit_triangle())).halfedges.empty());

  PlaneSplit broken;
  broken.in_e0 = {true, false};
  broken.e0 = {0};
  broken.e1 = {1};
  Drawing apart = single_edge();
  apart.vertices.push_back(pt(5, 0));
  apart.vertices.push_back(pt(6, 0));
  apart.edges.push_back({2, 3});
  CHECK_THROWS_AS(halfedge_extraction(apart, broken), InconsistencyError);
}

TEST_CASE("type 4 bad triangle") {
  Drawing d = type4_gadget();
  std::vector<int> e0 = {edge_index(d, 0, 1), edge_index(d, 0, 2), edge_index(d, 1, 2), edge_index(d, 5, 6),
                         edge_index(d, 7, 8)};
  PlaneSplit s = make_split(d, e0);
  auto bad = bad_triangle_classify(d, s);
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].type == 4);
  CHECK(bad[0].e == edge_index(d, 1, 2));
  CHECK(std::set<int>{bad[0].f1, bad[0].f2} == std::set<int>{edge_index(d, 5, 6), edge_index(d, 7, 8)});

  // Type 4 needs no flip; the helper across the base is large.
  PlaneSplit repaired = flip_repair(d, s);
  CHECK(repaired.e0 == s.e0);
  auto audit = discharging_audit(d, repaired);
  CHECK(audit.transfers.size() == 1);
  CHECK(audit.passed());
  CHECK(audit.total_charge == audit.total_final);
}

TEST_CASE("type 1 flip") {
  Drawing d = type1_gadget();
  std::vector<int> e0 = {edge_index(d, 0, 1), edge_index(d, 0, 2), edge_index(d, 1, 2)};
  PlaneSplit s = make_split(d, e0);
  auto bad = bad_triangle_classify(d, s);
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].type == 1);
  int f3_before = face_decomposition(d, s).stats.f3;
  PlaneSplit r = flip_repair(d, s);
  CHECK(r.flips == 1);
  CHECK(r.size0() == s.size0());
  CHECK(face_decomposition(d, r).stats.f3 < f3_before);
  CHECK(r.in_e0[edge_index(d, 0, 3)]);
  CHECK_FALSE(r.in_e0[edge_index(d, 1, 2)]);
  CHECK(bad_triangle_classify(d, r).empty());
  CHECK(discharging_audit(d, r).passed());
}

TEST_CASE("discharging on a crossing-free drawing") {
  Drawing d = unit_triangle();
  auto a = discharging_audit(d, plane_subgraph(d));
  CHECK(a.transfers.empty());
  CHECK(a.passed());
  for (const auto& f : a.faces) CHECK(f.h == 0);
}

TEST_CASE("matchstick reduction") {
  CHECK(matchstick_reduction(unit_triangle()) == unit_triangle());
  Drawing x = matchstick_reduction(unit_x());
  CHECK(x.e() == 1);
  CHECK(crossing_report(x).crossings.empty());
}

TEST_CASE("corpus: repaired splits pass the discharging audit") {
  CorpusOptions corpus;
  corpus.pendants = 10;
  int flips = 0;
  for (const auto& d : random_corpus(3, 60, corpus)) {
    CAPTURE(serialize_drawing(d));
    for (auto mode : {SplitMode::exact, SplitMode::greedy}) {
      SplitOptions opt;
      opt.mode = mode;
      PlaneSplit s = plane_subgraph(d, opt);
      for (const auto& b : bad_triangle_classify(d, s)) CHECK(b.type == 4);
      auto a = discharging_audit(d, s);
      CHECK(a.passed());
      auto g = gt_bound_check(d, s);
      CHECK(g.p1);
      CHECK(g.p2);
    }
    SplitOptions raw;
    raw.repair = false;
    PlaneSplit before = plane_subgraph(d, raw);
    PlaneSplit after = flip_repair(d, before);
    CHECK(after.size0() == before.size0() + after.readded);
    flips += after.flips;

    Drawing m = matchstick_reduction(d);
    CHECK(crossing_report(m).crossings.empty());
    CHECK(m.e() >= d.e() - static_cast<int>(crossing_report(d).crossings.size()));
  }
  CHECK(flips > 0);
}

TEST_CASE("flips that strand an E1 edge re-add it before the next round") {
  // Seed 99 holds a greedy split where a flip removes the only E0 edge that
  // another E1 edge crossed.
  CorpusOptions corpus;
  corpus.pendants = 12;
  int readded = 0;
  for (const auto& d : random_corpus(99, 120, corpus)) {
    CAPTURE(serialize_drawing(d));
    SplitOptions opt;
    opt.mode = SplitMode::greedy;
    PlaneSplit s;
    REQUIRE_NOTHROW(s = plane_subgraph(d, opt));
    readded += s.readded;
    auto x = crossing_report(d);
    for (int e : s.e1) {
      bool crossed = std::any_of(x.crossings.begin(), x.crossings.end(), [&](const Crossing& c) {
        return (c.e1 == e && s.in_e0[c.e2]) || (c.e2 == e && s.in_e0[c.e1]);
      });
      CHECK(crossed);
    }
    CHECK(discharging_audit(d, s).passed());
  }
  CHECK(readded > 0);
}
