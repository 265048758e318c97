#include <algorithm>
#include <numeric>

#include "common/geometry_index.h"
#include "udk/arrangement.h"

namespace udk {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Winding number of the closed walk around p; p must not lie on the walk.
int winding(const PlaneGraph& g, const FaceStructure& f, const FaceStructure::Walk& w, const Point& p) {
  int wn = 0;
  for (int h : w.halfedges) {
    const Point& a = g.points[f.origin(g, h)];
    const Point& b = g.points[f.target(g, h)];
    bool a_below = a.y <= p.y;
    bool b_below = b.y <= p.y;
    if (a_below && !b_below) {
      if (orientation(a, b, p) > 0) ++wn;
    } else if (!a_below && b_below) {
      if (orientation(a, b, p) < 0) --wn;
    }
  }
  return wn;
}

struct WalkBox {
  double x0, y0, x1, y1;
  bool contains(const detail::Box& b) const { return b.x1 >= x0 && b.x0 <= x1 && b.y1 >= y0 && b.y0 <= y1; }
};

}  // namespace

int FaceStructure::origin(const PlaneGraph& g, int h) const {
  const auto& s = g.segments[h / 2];
  return (h % 2 == 0) ? s.from : s.to;
}

int FaceStructure::target(const PlaneGraph& g, int h) const {
  const auto& s = g.segments[h / 2];
  return (h % 2 == 0) ? s.to : s.from;
}

FaceStructure trace_faces(const PlaneGraph& g, const Drawing& d) {
  ExactFrame frame(d.vertices);
  FaceStructure f;
  const int nodes = static_cast<int>(g.points.size());
  const int halfedges = 2 * static_cast<int>(g.segments.size());
  f.outgoing.assign(nodes, {});
  for (int h = 0; h < halfedges; ++h) f.outgoing[f.origin(g, h)].push_back(h);

  auto edge_of = [&](int h) -> const Edge& { return d.edges[g.segments[h / 2].edge]; };
  auto sgn = [](int h) { return h % 2 == 0 ? 1 : -1; };
  auto half = [&](int h) {
    const Edge& e = edge_of(h);
    int dy = sgn(h) * frame.dy_sign(e.u, e.v);
    int dx = sgn(h) * frame.dx_sign(e.u, e.v);
    return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
  };
  std::vector<int> pos(halfedges, 0);
  for (int v = 0; v < nodes; ++v) {
    auto& out = f.outgoing[v];
    std::sort(out.begin(), out.end(), [&](int a, int b) {
      int ha = half(a), hb = half(b);
      if (ha != hb) return ha < hb;
      const Edge &ea = edge_of(a), &eb = edge_of(b);
      int c = sgn(a) * sgn(b) * frame.cross_sign(ea.u, ea.v, eb.u, eb.v);
      if (c != 0) return c > 0;
      return a < b;
    });
    for (std::size_t i = 0; i < out.size(); ++i) pos[out[i]] = static_cast<int>(i);
  }

  auto next = [&](int h) {
    int v = f.target(g, h);
    const auto& out = f.outgoing[v];
    int i = pos[FaceStructure::twin(h)];
    int deg = static_cast<int>(out.size());
    return out[(i - 1 + deg) % deg];
  };

  f.walk_of.assign(halfedges, -1);
  for (int h = 0; h < halfedges; ++h) {
    if (f.walk_of[h] != -1) continue;
    FaceStructure::Walk w;
    int id = static_cast<int>(f.walks.size());
    int cur = h;
    do {
      f.walk_of[cur] = id;
      w.halfedges.push_back(cur);
      w.twice_area += cross(g.points[f.origin(g, cur)], g.points[f.target(g, cur)]);
      cur = next(cur);
    } while (cur != h);
    f.walks.push_back(std::move(w));
  }

  UnionFind uf(nodes);
  for (const auto& s : g.segments) uf.unite(s.from, s.to);
  std::vector<int> comp_of(nodes, -1);
  std::vector<int> comp_rep;  // a node of each component
  for (int v = 0; v < nodes; ++v) {
    int r = uf.find(v);
    if (comp_of[r] == -1) {
      comp_of[r] = static_cast<int>(comp_rep.size());
      comp_rep.push_back(v);
    }
    comp_of[v] = comp_of[r];
  }
  f.components = static_cast<int>(comp_rep.size());

  // Regions: 0 unbounded, then one per bounded walk.
  f.regions.push_back({{}, {}, false});
  f.region_of_walk.assign(f.walks.size(), 0);
  f.region_of_node.assign(nodes, -1);
  std::vector<int> outer_walk(f.components, -1);
  std::vector<int> bounded;
  for (int w = 0; w < static_cast<int>(f.walks.size()); ++w) {
    int c = comp_of[f.origin(g, f.walks[w].halfedges.front())];
    if (f.walks[w].twice_area.sign() > 0) {
      f.region_of_walk[w] = static_cast<int>(f.regions.size());
      f.regions.push_back({{w}, {}, true});
      bounded.push_back(w);
    } else {
      if (outer_walk[c] != -1) {
        throw InconsistencyError("trace_faces: component with two outer walks");
      }
      outer_walk[c] = w;
    }
  }

  std::vector<WalkBox> boxes;
  for (int w : bounded) {
    WalkBox b{1e300, 1e300, -1e300, -1e300};
    for (int h : f.walks[w].halfedges) {
      detail::Box p = detail::point_box(g.points[f.origin(g, h)]);
      b.x0 = std::min(b.x0, p.x0);
      b.y0 = std::min(b.y0, p.y0);
      b.x1 = std::max(b.x1, p.x1);
      b.y1 = std::max(b.y1, p.y1);
    }
    boxes.push_back(b);
  }

  for (int c = 0; c < f.components; ++c) {
    int rep = comp_rep[c];
    int region = 0;
    if (f.components > 1) {
      const Point& p = g.points[rep];
      detail::Box pb = detail::point_box(p);
      int best = -1;
      for (std::size_t i = 0; i < bounded.size(); ++i) {
        int w = bounded[i];
        if (comp_of[f.origin(g, f.walks[w].halfedges.front())] == c) continue;
        if (!boxes[i].contains(pb)) continue;
        if (winding(g, f, f.walks[w], p) == 0) continue;
        if (best == -1 || f.walks[w].twice_area < f.walks[best].twice_area) best = w;
      }
      if (best != -1) region = f.region_of_walk[best];
    }
    if (outer_walk[c] != -1) {
      f.region_of_walk[outer_walk[c]] = region;
      f.regions[region].walks.push_back(outer_walk[c]);
    } else {
      f.region_of_node[rep] = region;
      f.regions[region].isolated.push_back(rep);
    }
  }
  for (auto& r : f.regions) {
    std::sort(r.walks.begin(), r.walks.end());
    std::sort(r.isolated.begin(), r.isolated.end());
  }
  return f;
}

int locate_point(const PlaneGraph& g, const FaceStructure& f, const Point& p) {
  int best = -1;
  for (int w = 0; w < static_cast<int>(f.walks.size()); ++w) {
    if (f.walks[w].twice_area.sign() <= 0) continue;
    if (winding(g, f, f.walks[w], p) == 0) continue;
    if (best == -1 || f.walks[w].twice_area < f.walks[best].twice_area) best = w;
  }
  return best == -1 ? 0 : f.region_of_walk[best];
}

}  // namespace udk
