#include <algorithm>
#include <map>
#include <numeric>

#include "udk/arrangement.h"

namespace udk {

Planarization planarize(const Drawing& d) {
  Planarization p;
  p.drawing = d;
  p.crossings = crossing_report(d);
  PlaneGraph& g = p.graph;
  g.points = d.vertices;
  g.vertex_of.resize(d.vertices.size());
  std::iota(g.vertex_of.begin(), g.vertex_of.end(), 0);

  // Several edges through one point share a single node.
  std::map<Point, int, PointRepLess> node_at;
  struct Stop {
    QField t;
    int node;
  };
  std::vector<std::vector<Stop>> stops(d.edges.size());
  p.crossing_node.reserve(p.crossings.crossings.size());
  for (const auto& x : p.crossings.crossings) {
    auto [it, inserted] = node_at.try_emplace(x.point, static_cast<int>(g.points.size()));
    if (inserted) {
      g.points.push_back(x.point);
      g.vertex_of.push_back(-1);
    }
    p.crossing_node.push_back(it->second);
    stops[x.e1].push_back({x.t1, it->second});
    stops[x.e2].push_back({x.t2, it->second});
  }

  p.edge_segments.resize(d.edges.size());
  for (int e = 0; e < d.e(); ++e) {
    auto& s = stops[e];
    s.push_back({QField(0), d.edges[e].u});
    s.push_back({QField(1), d.edges[e].v});
    std::sort(s.begin(), s.end(), [](const Stop& a, const Stop& b) { return a.t < b.t; });
    s.erase(std::unique(s.begin(), s.end(), [](const Stop& a, const Stop& b) { return a.node == b.node; }),
            s.end());
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      p.edge_segments[e].push_back(static_cast<int>(g.segments.size()));
      g.segments.push_back({s[i].node, s[i + 1].node, e});
      p.seg_t0.push_back(s[i].t);
      p.seg_t1.push_back(s[i + 1].t);
    }
  }
  return p;
}

bool is_connected(const Planarization& p) {
  const auto& g = p.graph;
  const int n = static_cast<int>(g.points.size());
  if (n == 0) return false;
  std::vector<std::vector<int>> adj(n);
  for (const auto& s : g.segments) {
    adj[s.from].push_back(s.to);
    adj[s.to].push_back(s.from);
  }
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

std::vector<Cell> cell_decomposition(const Planarization& p) {
  return cell_decomposition(p, trace_faces(p.graph, p.drawing));
}

std::vector<Cell> cell_decomposition(const Planarization& p, const FaceStructure& f) {
  const auto& g = p.graph;
  std::vector<Cell> cells;
  cells.reserve(f.regions.size());
  for (const auto& r : f.regions) {
    Cell c;
    c.bounded = r.bounded;
    for (int w : r.walks) {
      std::vector<int> nodes;
      for (int h : f.walks[w].halfedges) {
        int v = f.origin(g, h);
        nodes.push_back(v);
        ++c.segment_incidences;
        if (g.vertex_of[v] >= 0) {
          ++c.vertex_incidences;
        } else {
          c.crossings.push_back(v);
        }
      }
      c.twice_area += f.walks[w].twice_area;
      c.boundary.push_back(std::move(nodes));
    }
    for (int v : r.isolated) {
      c.boundary.push_back({v});
      if (g.vertex_of[v] >= 0) ++c.vertex_incidences;
    }
    std::sort(c.crossings.begin(), c.crossings.end());
    c.crossings.erase(std::unique(c.crossings.begin(), c.crossings.end()), c.crossings.end());
    c.size = c.segment_incidences + c.vertex_incidences;
    cells.push_back(std::move(c));
  }
  return cells;
}

}  // namespace udk
