#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "udk/faces.h"

namespace udk {

namespace {

// Angular order of directions a->b around a common origin: counterclockwise
// starting at the positive x axis.
struct DirectionLess {
  const ExactFrame& frame;

  int half(int a, int b) const {
    int dy = frame.dy_sign(a, b), dx = frame.dx_sign(a, b);
    return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
  }
  bool operator()(int a, int b, int c, int d) const {
    int h1 = half(a, b), h2 = half(c, d);
    if (h1 != h2) return h1 < h2;
    return frame.cross_sign(a, b, c, d) > 0;
  }
};

}  // namespace

SplitGeometry split_geometry(const Drawing& d, const PlaneSplit& split) {
  return split_geometry(d, split, crossing_report(d));
}

SplitGeometry split_geometry(const Drawing& d, const PlaneSplit& split, CrossingReport crossings) {
  SplitGeometry g;
  g.graph.points = d.vertices;
  g.graph.vertex_of.resize(d.vertices.size());
  std::iota(g.graph.vertex_of.begin(), g.graph.vertex_of.end(), 0);
  for (int e : split.e0) g.graph.segments.push_back({d.edges[e].u, d.edges[e].v, e});
  g.faces = trace_faces(g.graph, d);
  g.crossings = std::move(crossings);
  g.e0_hits.assign(d.edges.size(), {});
  for (const auto& c : g.crossings.crossings) {
    bool a = split.in_e0[c.e1], b = split.in_e0[c.e2];
    if (a && b) throw InconsistencyError("split_geometry: E0 edges cross");
    if (a) g.e0_hits[c.e2].emplace_back(c.t2, c.e1);
    if (b) g.e0_hits[c.e1].emplace_back(c.t1, c.e2);
  }
  for (auto& hits : g.e0_hits) {
    std::sort(hits.begin(), hits.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  }
  return g;
}

FaceDecomposition face_decomposition(const Drawing& d, const PlaneSplit& split) {
  return face_decomposition(d, split_geometry(d, split));
}

FaceDecomposition face_decomposition(const Drawing&, const SplitGeometry& geo) {
  const auto& f = geo.faces;
  const auto& g = geo.graph;
  FaceDecomposition out;
  for (const auto& r : f.regions) {
    Face face;
    face.bounded = r.bounded;
    for (int w : r.walks) {
      std::vector<int> nodes;
      for (int h : f.walks[w].halfedges) {
        nodes.push_back(f.origin(g, h));
        face.walk_edges.push_back(g.segments[h / 2].edge);
      }
      face.walks.push_back(std::move(nodes));
    }
    face.isolated = r.isolated;
    face.size = static_cast<int>(face.walk_edges.size());
    std::set<int> distinct(face.walk_edges.begin(), face.walk_edges.end());
    face.distinct = static_cast<int>(distinct.size());
    face.m = static_cast<int>(face.walks.size() + face.isolated.size());
    face.t = face.size + 3 * face.m - 6;
    if (face.size == 3) ++out.stats.f3;
    if (face.size >= 5) out.stats.f_ge5 += face.size;
    out.faces.push_back(std::move(face));
  }
  return out;
}

GtBoundCheck gt_bound_check(const Drawing& d, const PlaneSplit& split) {
  GtBoundCheck r;
  r.n = d.n();
  r.e = d.e();
  r.stats = face_decomposition(d, split).stats;
  const long gap = 3L * r.n - r.e;  // 3n - e
  r.p1 = 10 * gap >= r.stats.f_ge5;
  r.p2 = gap >= 0 && 25 * gap * gap >= r.stats.f3;
  r.slack1 = static_cast<double>(gap) - static_cast<double>(r.stats.f_ge5) / 10.0;
  r.slack2 = static_cast<double>(gap) - std::sqrt(static_cast<double>(r.stats.f3)) / 5.0;
  return r;
}

HalfedgeResult halfedge_extraction(const Drawing& d, const PlaneSplit& split) {
  return halfedge_extraction(d, split, split_geometry(d, split));
}

HalfedgeResult halfedge_extraction(const Drawing& d, const PlaneSplit& split, const SplitGeometry& geo) {
  ExactFrame frame(d.vertices);
  DirectionLess less{frame};
  const auto& f = geo.faces;
  const auto& g = geo.graph;

  // Face entered by the initial piece of the segment from v towards w.
  auto face_at = [&](int v, int w) {
    const auto& out = f.outgoing[v];
    if (out.empty()) return f.region_of_node[v];
    int before = 0;
    for (int h : out) {
      if (less(v, f.target(g, h), v, w)) ++before;
    }
    int deg = static_cast<int>(out.size());
    return f.region_of_halfedge(out[(before - 1 + deg) % deg]);
  };

  HalfedgeResult r;
  r.per_face.assign(f.regions.size(), 0);
  std::vector<int> first_of(d.edges.size(), -1);
  for (int e : split.e1) {
    const auto& hits = geo.e0_hits[e];
    if (hits.empty()) {
      throw InconsistencyError("halfedge_extraction: E1 edge " + std::to_string(e) + " crosses no E0 edge");
    }
    const Edge& ed = d.edges[e];
    first_of[e] = static_cast<int>(r.halfedges.size());
    r.halfedges.push_back({e, ed.u, hits.front().second, hits.front().first, face_at(ed.u, ed.v), -1});
    r.halfedges.push_back({e, ed.v, hits.back().second, hits.back().first, face_at(ed.v, ed.u), -1});
  }
  for (const auto& h : r.halfedges) ++r.per_face[h.face];

  // Halfedge of edge e containing parameter t, or -1.
  auto holder = [&](int e, const QField& t) {
    int i = first_of[e];
    if (i < 0) return -1;
    if (t < r.halfedges[i].t_end) return i;
    if (t > r.halfedges[i + 1].t_end) return i + 1;
    return -1;
  };
  for (const auto& c : geo.crossings.crossings) {
    if (split.in_e0[c.e1] || split.in_e0[c.e2]) continue;
    int a = holder(c.e1, c.t1), b = holder(c.e2, c.t2);
    if (a < 0 || b < 0) continue;
    if (r.halfedges[a].partner < 0) r.halfedges[a].partner = b;
    if (r.halfedges[b].partner < 0) r.halfedges[b].partner = a;
  }
  return r;
}

std::vector<BadTriangle> bad_triangle_classify(const Drawing& d, const PlaneSplit& split) {
  SplitGeometry geo = split_geometry(d, split);
  FaceDecomposition fd = face_decomposition(d, geo);
  HalfedgeResult hr = halfedge_extraction(d, split, geo);
  return bad_triangle_classify(d, split, geo, fd, hr);
}

std::vector<BadTriangle> bad_triangle_classify(const Drawing&, const PlaneSplit&, const SplitGeometry& geo,
                                               const FaceDecomposition& fd, const HalfedgeResult& hr) {
  std::vector<std::vector<int>> inside(fd.faces.size());
  for (int i = 0; i < static_cast<int>(hr.halfedges.size()); ++i) inside[hr.halfedges[i].face].push_back(i);

  auto others = [&](int edge, int skip) {
    std::set<int> s;
    for (const auto& [t, f] : geo.e0_hits[edge]) {
      if (f != skip) s.insert(f);
    }
    return s;
  };

  std::vector<BadTriangle> out;
  for (int fi = 0; fi < static_cast<int>(fd.faces.size()); ++fi) {
    const Face& face = fd.faces[fi];
    if (face.size != 3 || face.m != 1) continue;
    const int h = static_cast<int>(inside[fi].size());
    if (h >= 3) {
      throw InconsistencyError("bad_triangle_classify: triangular face " + std::to_string(fi) + " holds " +
                               std::to_string(h) + " halfedges");
    }
    if (h != 2) continue;
    BadTriangle b;
    b.face = fi;
    std::copy(face.walks[0].begin(), face.walks[0].end(), b.corners.begin());
    b.alpha = inside[fi][0];
    b.beta = inside[fi][1];
    const Halfedge &a = hr.halfedges[b.alpha], &c = hr.halfedges[b.beta];
    b.e = a.first_hit;
    if (a.vertex != c.vertex) {
      b.type = 1;
    } else {
      if (c.first_hit != b.e) {
        throw InconsistencyError("bad_triangle_classify: halfedges from one corner leave through different sides");
      }
      std::set<int> sa = others(a.edge, b.e), sb = others(c.edge, b.e);
      std::vector<int> common;
      std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
      if (sa.empty() || sb.empty()) {
        b.type = 2;
      } else if (!common.empty()) {
        b.type = 3;
        b.f = common.front();
      } else {
        b.type = 4;
        b.f1 = *sa.begin();
        b.f2 = *sb.begin();
      }
    }
    out.push_back(b);
  }
  return out;
}

}  // namespace udk
