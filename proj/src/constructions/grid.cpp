#include <algorithm>
#include <map>
#include <set>

#include "gate.h"
#include "layout.h"
#include "udk/constructions.h"

namespace udk {

namespace {

// All dodecagons of `layers` rings, with vertices numbered in placement
// order: dodecagon by dodecagon along the spiral, and inside a dodecagon
// always the new vertex with the most edges to placed ones first.
struct Body {
  std::vector<Point> vertices;
  std::vector<Edge> edges;
  std::vector<int> edge_owner;  // dodecagon introducing the edge
  std::vector<bool> edge_dashed;
  std::vector<int> owner_first_vertex;  // per dodecagon, first vertex it placed (or -1)
  std::vector<int> placed_after;  // per dodecagon, vertex count once it is complete
};

Body build_body(int layers) {
  static const Drawing tmpl = dodecagon();
  const std::vector<int> tmpl_dashed = dashed_edges(tmpl);
  const std::set<int> dashed_set(tmpl_dashed.begin(), tmpl_dashed.end());
  std::vector<std::vector<int>> adj(tmpl.vertices.size());
  for (const auto& e : tmpl.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }

  // Center spacing 2 + sqrt3 along the lattice directions.
  const QField D(2, 1);
  const Point ex{D, 0};
  const Point e60{D * QField::ratio(1, 2), D * QField(0, mpq_class(1, 2))};

  Body b;
  std::map<Point, int, PointRepLess> index;
  std::map<Edge, int> edge_index;
  const auto positions = detail::spiral_positions(layers);
  for (int di = 0; di < static_cast<int>(positions.size()); ++di) {
    const auto& [pa, pb] = positions[di];
    const Point center{ex.x * QField(pa) + e60.x * QField(pb), e60.y * QField(pb)};
    const int m = tmpl.n();
    std::vector<int> global(m, -1);
    std::vector<Point> moved(m);
    for (int i = 0; i < m; ++i) {
      moved[i] = tmpl.vertices[i] + center;
      auto it = index.find(moved[i]);
      if (it != index.end()) global[i] = it->second;
    }
    b.owner_first_vertex.push_back(-1);
    for (;;) {
      int best = -1, best_score = -1;
      for (int i = 0; i < m; ++i) {
        if (global[i] != -1) continue;
        int score = 0;
        for (int j : adj[i]) score += global[j] != -1;
        if (score > best_score) best = i, best_score = score;
      }
      if (best == -1) break;
      global[best] = static_cast<int>(b.vertices.size());
      if (b.owner_first_vertex[di] == -1) b.owner_first_vertex[di] = global[best];
      index.emplace(moved[best], global[best]);
      b.vertices.push_back(moved[best]);
    }
    b.placed_after.push_back(static_cast<int>(b.vertices.size()));
    for (int ei = 0; ei < tmpl.e(); ++ei) {
      Edge e(global[tmpl.edges[ei].u], global[tmpl.edges[ei].v]);
      auto [it, inserted] = edge_index.try_emplace(e, static_cast<int>(b.edges.size()));
      if (!inserted) continue;
      b.edges.push_back(e);
      b.edge_owner.push_back(di);
      b.edge_dashed.push_back(dashed_set.count(ei) > 0);
    }
  }
  return b;
}

// Induced drawing on the first n vertices. Edges of dodecagons that have not
// placed a vertex of their own close notches between earlier dodecagons and
// are marked dashed, like the template's extra edges.
Drawing induced(const Body& b, int n) {
  Drawing d;
  d.vertices.assign(b.vertices.begin(), b.vertices.begin() + n);
  std::vector<int> dashed;
  for (std::size_t i = 0; i < b.edges.size(); ++i) {
    const Edge& e = b.edges[i];
    if (e.v >= n) continue;
    const int first = b.owner_first_vertex[b.edge_owner[i]];
    const bool notch = first == -1 || first >= n;
    if (b.edge_dashed[i] || notch) dashed.push_back(d.e());
    d.edges.push_back(e);
  }
  set_dashed_edges(d, std::move(dashed));
  sort_edges(d);
  return d;
}

}  // namespace

Drawing dodecagon_grid(int k) {
  const ConstructionParams p = params_for_layers(k);
  Body b = build_body(k + 1);
  Drawing d = induced(b, b.placed_after[p.h - 1]);
  const std::int64_t want_e = grid_edges(k);
  if (d.n() != p.n || d.e() != want_e) {
    throw ConstructionError("dodecagon_grid(" + std::to_string(k) + "): got n=" + std::to_string(d.n()) +
                            ", e=" + std::to_string(d.e()) + "; formulas give n=" + std::to_string(p.n) +
                            ", e=" + std::to_string(want_e) + " (diff " + std::to_string(d.n() - p.n) + ", " +
                            std::to_string(d.e() - want_e) + ")");
  }
  d.meta["construction"] = "grid";
  d.meta["k"] = std::to_string(k);
  detail::construction_gate(d, 2, "dodecagon_grid(" + std::to_string(k) + ")");
  return d;
}

Drawing spiral_construction(std::int64_t n) {
  if (n < 29) throw PreconditionError("spiral_construction: needs n >= 29");
  const ConstructionParams p = params_for_vertices(n);
  Body b = build_body(p.k + 2);
  if (p.n > static_cast<std::int64_t>(b.vertices.size())) {
    throw ConstructionError("spiral_construction: layout too small");
  }
  Drawing d = induced(b, static_cast<int>(n));
  d.meta["construction"] = "spiral";
  d.meta["k"] = std::to_string(p.k);
  d.meta["A"] = std::to_string(p.A);
  detail::construction_gate(d, 2, "spiral_construction(" + std::to_string(n) + ")");
  return d;
}

}  // namespace udk
