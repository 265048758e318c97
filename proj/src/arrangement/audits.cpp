#include <algorithm>
#include <map>
#include <set>

#include "common/geometry_index.h"
#include "udk/arrangement.h"

namespace udk {

namespace {

int crossing_node_count(const Planarization& p) {
  int x = 0;
  for (int v : p.graph.vertex_of) x += v < 0;
  return x;
}

// Interiors of two triangles are disjoint iff the line through some side
// separates them.
bool separated(const std::array<Point, 3>& s, const std::array<Point, 3>& t) {
  for (int i = 0; i < 3; ++i) {
    const Point &a = s[i], &b = s[(i + 1) % 3], &c = s[(i + 2) % 3];
    int side = orientation(a, b, c);
    bool all = true;
    for (const auto& q : t) {
      if (orientation(a, b, q) * side > 0) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

bool interior_disjoint(const std::array<Point, 3>& s, const std::array<Point, 3>& t) {
  return separated(s, t) || separated(t, s);
}

}  // namespace

DensityResult density_check(const Drawing& d, const mpq_class& t) {
  Planarization p = planarize(d);
  return density_check(d, p, cell_decomposition(p), t);
}

DensityResult density_check(const Drawing& d, const Planarization& p, const std::vector<Cell>& cells,
                            const mpq_class& t) {
  if (d.edges.empty()) throw PreconditionError("density_check: drawing has no edges");
  if (!is_connected(p)) throw PreconditionError("density_check: planarization is not connected");
  DensityResult r;
  r.t = t;
  r.edges = d.e();
  mpq_class sum = 0;
  for (const auto& c : cells) sum += (t - 1) / 4 * c.size - t;
  r.rhs = t * (d.n() - 2) - sum - crossing_node_count(p);
  r.slack = r.rhs - r.edges;
  r.holds = r.edges <= r.rhs;
  return r;
}

SmallCellReport small_cell_classifier(const Drawing& d) {
  Planarization p = planarize(d);
  return small_cell_classifier(p, cell_decomposition(p));
}

SmallCellReport small_cell_classifier(const Planarization& p, const std::vector<Cell>& cells) {
  SmallCellReport r;
  r.one_plane = p.crossings.is_k_plane(1);
  for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
    const Cell& c = cells[i];
    if (c.size > 5) continue;
    r.cells.push_back(i);
    if (c.size == 5) ++r.c5;
    const int segs = c.segment_incidences, verts = c.vertex_incidences;
    // A simple boundary walk alternates between segments and corners, so the
    // corners that are not vertices must be distinct crossings.
    bool simple = c.boundary.size() == 1 && static_cast<int>(c.crossings.size()) == segs - verts;
    int type = -1;
    if (simple) {
      if (segs == 3 && verts <= 2) type = 2 - verts;  // a, b, c
      if (segs == 4 && verts <= 1) type = 4 - verts;  // d, e
      if (segs == 5 && verts == 0) type = 5;          // f
    }
    if (type < 0) {
      r.unclassifiable.push_back(i);
      continue;
    }
    r.types.push_back(static_cast<SmallCellType>(type));
    ++r.histogram[type];
    if (type != 0) r.only_type_a = false;
  }
  return r;
}

IncidenceAudit crossing_incidence_audit(const Drawing& d) {
  Planarization p = planarize(d);
  if (!p.crossings.is_k_plane(1)) {
    throw PreconditionError("crossing_incidence_audit: drawing is not 1-plane");
  }
  std::vector<Cell> cells = cell_decomposition(p);
  const auto& g = p.graph;
  IncidenceAudit a;
  a.crossings = crossing_node_count(p);
  std::map<int, std::vector<int>> five_cells;  // crossing node -> size-5 cells
  for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
    if (cells[i].size != 5) continue;
    ++a.c5;
    for (int x : cells[i].crossings) five_cells[x].push_back(i);
  }
  a.triangles_unit = true;
  for (const auto& [x, list] : five_cells) {
    if (list.size() == 1) ++a.x1;
    if (list.size() > 2) a.overloaded.push_back(x);
    if (list.size() != 2) continue;
    ++a.x2;
    std::set<int> verts;
    for (int c : list) {
      for (const auto& walk : cells[c].boundary) {
        for (int v : walk) {
          if (g.vertex_of[v] >= 0) verts.insert(g.vertex_of[v]);
        }
      }
    }
    if (verts.size() != 3) {
      a.triangles_unit = false;
      continue;
    }
    UnitTriangle tri;
    std::copy(verts.begin(), verts.end(), tri.vertices.begin());
    tri.crossing_node = x;
    for (int i = 0; i < 3; ++i) {
      if (squared_distance(d.vertices[tri.vertices[i]], d.vertices[tri.vertices[(i + 1) % 3]]) != 1) {
        a.triangles_unit = false;
      }
    }
    a.triangles.push_back(tri);
  }

  a.disjoint = true;
  detail::GridIndex grid;
  std::vector<std::array<Point, 3>> pts;
  for (int i = 0; i < static_cast<int>(a.triangles.size()); ++i) {
    const auto& v = a.triangles[i].vertices;
    pts.push_back({d.vertices[v[0]], d.vertices[v[1]], d.vertices[v[2]]});
    detail::Box b = detail::segment_box(pts[i][0], pts[i][1]);
    detail::Box c = detail::point_box(pts[i][2]);
    grid.insert(i, {std::min(b.x0, c.x0), std::min(b.y0, c.y0), std::max(b.x1, c.x1), std::max(b.y1, c.y1)});
  }
  for (auto [i, j] : grid.candidate_pairs()) {
    if (!interior_disjoint(pts[i], pts[j])) {
      a.disjoint = false;
      break;
    }
  }
  a.sum_holds = a.x1 + 2 * a.x2 >= a.c5;
  a.count_holds = static_cast<int>(a.triangles.size()) == a.x2 && a.x2 >= a.c5 - a.crossings;
  a.claims_hold = a.overloaded.empty() && a.sum_holds && a.triangles_unit && a.disjoint && a.count_holds;
  return a;
}

OuterMetrics outer_metrics(const Drawing& d) {
  require_valid(d, "outer_metrics");
  Planarization p = planarize(d);
  FaceStructure f = trace_faces(p.graph, p.drawing);
  OuterMetrics m;
  for (int w : f.regions[0].walks) {
    // Unit edges: a segment is as long as its parameter range.
    for (int h : f.walks[w].halfedges) m.perimeter += p.seg_t1[h / 2] - p.seg_t0[h / 2];
    m.area -= f.walks[w].twice_area;
  }
  m.area /= QField(2);
  const QField l2 = m.perimeter * m.perimeter;
  if ((l2 - QField(mpq_class(4 * 355, 113)) * m.area).sign() >= 0) {
    m.isoperimetric = 1;
  } else if ((l2 - QField(mpq_class(4 * 333, 106)) * m.area).sign() < 0) {
    m.isoperimetric = -1;
  }
  return m;
}

}  // namespace udk
