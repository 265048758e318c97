#pragma once

#include <array>
#include <vector>

#include "udk/model.h"
#include "udk/numeric.h"

namespace udk {

/// Proper crossing between edges e1 < e2. `t1`, `t2` are the positions of
/// the crossing along each edge, 0 at the smaller endpoint index, 1 at the
/// larger.
struct Crossing {
  int e1 = 0;
  int e2 = 0;
  Point point;
  QField t1;
  QField t2;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct CrossingReport {
  std::vector<int> per_edge;
  std::vector<Crossing> crossings;  // sorted by (e1, e2)
  int max_crossings_per_edge = 0;

  bool is_k_plane(int k) const { return max_crossings_per_edge <= k; }
  friend bool operator==(const CrossingReport&, const CrossingReport&) = default;
};

/// Exact crossings found through a uniform-grid candidate filter. Throws
/// DegenerateInput when two edges touch without crossing or overlap.
CrossingReport crossing_report(const Drawing& d);
/// Same contract, computed by testing every edge pair in Q(sqrt3) directly.
CrossingReport oracle_crossings(const Drawing& d);

// ---------------------------------------------------------------------------
// Plane graphs and their faces.

/// Straight-line plane graph whose segments lie on edges of a drawing.
/// Segment `from -> to` points the same way as its parent edge `u -> v`.
struct PlaneGraph {
  struct Segment {
    int from = 0;
    int to = 0;
    int edge = 0;
  };
  std::vector<Point> points;
  std::vector<int> vertex_of;  // original vertex index, or -1 for a crossing node
  std::vector<Segment> segments;
};

/// Face structure of a PlaneGraph. Half-edge h runs along segment h / 2,
/// forwards when h is even. Each walk keeps its face on the left.
struct FaceStructure {
  struct Walk {
    std::vector<int> halfedges;
    QField twice_area;  // signed, positive for bounded faces
  };
  struct Region {
    std::vector<int> walks;
    std::vector<int> isolated;  // nodes without segments lying in the region
    bool bounded = false;
  };

  std::vector<Walk> walks;
  std::vector<int> walk_of;  // per half-edge
  std::vector<Region> regions;  // regions[0] is the unbounded one
  std::vector<int> region_of_walk;
  std::vector<int> region_of_node;  // for isolated nodes, else -1
  std::vector<std::vector<int>> outgoing;  // per node, CCW order
  int components = 0;

  int origin(const PlaneGraph& g, int h) const;
  int target(const PlaneGraph& g, int h) const;
  static int twin(int h) { return h ^ 1; }
  int region_of_halfedge(int h) const { return region_of_walk[walk_of[h]]; }
};

/// Traces every face of `g`. Directions are compared through the parent
/// edges of `d`; nesting of components is resolved exactly.
FaceStructure trace_faces(const PlaneGraph& g, const Drawing& d);

/// Locates the region of `faces` containing `p`, which must avoid `g`.
int locate_point(const PlaneGraph& g, const FaceStructure& faces, const Point& p);

// ---------------------------------------------------------------------------
// Planarization and cells.

struct Planarization {
  Drawing drawing;
  PlaneGraph graph;
  std::vector<QField> seg_t0, seg_t1;  // parameter range of each segment on its edge
  std::vector<std::vector<int>> edge_segments;  // per edge, ordered from u to v
  std::vector<int> crossing_node;  // per crossing of `crossings`
  CrossingReport crossings;
};

Planarization planarize(const Drawing& d);

struct Cell {
  std::vector<std::vector<int>> boundary;  // node sequences, one per walk
  int segment_incidences = 0;
  int vertex_incidences = 0;
  int size = 0;
  std::vector<int> crossings;  // incident crossing nodes, ascending
  bool bounded = false;
  QField twice_area;  // sum of signed walk areas
};

std::vector<Cell> cell_decomposition(const Planarization& p);
std::vector<Cell> cell_decomposition(const Planarization& p, const FaceStructure& faces);

/// Whether the planarization is connected (isolated vertices count).
bool is_connected(const Planarization& p);

struct DensityResult {
  mpq_class t;
  int edges = 0;
  mpq_class rhs;
  mpq_class slack;  // rhs - edges
  bool holds = false;
};

/// |E| <= t(|V|-2) - sum_c ((t-1)/4 ||c|| - t) - |X| evaluated exactly.
DensityResult density_check(const Drawing& d, const mpq_class& t);
DensityResult density_check(const Drawing& d, const Planarization& p,
                            const std::vector<Cell>& cells, const mpq_class& t);

/// Census classes of cells of size at most five, indexed a..f:
/// a = 3 segments + 2 vertices, b = 3 + 1, c = 3 + 0, d = 4 + 1, e = 4 + 0,
/// f = 5 + 0.
enum class SmallCellType { a = 0, b, c, d, e, f };

struct SmallCellReport {
  std::array<int, 6> histogram{};
  std::vector<int> cells;  // indices of cells with size <= 5
  std::vector<SmallCellType> types;  // parallel to cells for classified ones
  std::vector<int> unclassifiable;  // small cells outside a..f, e.g. around a lone edge
  int c5 = 0;
  bool one_plane = false;
  /// No small cell is of types b..f.
  bool only_type_a = true;
};

SmallCellReport small_cell_classifier(const Drawing& d);
SmallCellReport small_cell_classifier(const Planarization& p, const std::vector<Cell>& cells);

struct UnitTriangle {
  std::array<int, 3> vertices{};
  int crossing_node = -1;
};

struct IncidenceAudit {
  int crossings = 0;
  int c5 = 0;
  int x1 = 0;
  int x2 = 0;
  std::vector<int> overloaded;  // crossing nodes incident to > 2 size-5 cells
  std::vector<UnitTriangle> triangles;
  bool sum_holds = false;        // x1 + 2 x2 >= c5
  bool triangles_unit = false;   // every extracted triangle is unit equilateral
  bool disjoint = false;         // pairwise interior-disjoint
  bool count_holds = false;      // |triangles| = x2 >= c5 - |X|
  bool claims_hold = false;
};

/// Requires a 1-plane drawing (PreconditionError otherwise).
IncidenceAudit crossing_incidence_audit(const Drawing& d);

struct OuterMetrics {
  QField perimeter;
  QField area;
  /// +1 when l^2 >= 4 pi A is certified with pi < 355/113, -1 when it fails
  /// even with pi > 333/106, 0 when the rational bounds cannot decide.
  int isoperimetric = 0;
  bool isoperimetric_holds() const { return isoperimetric > 0; }
};

OuterMetrics outer_metrics(const Drawing& d);

}  // namespace udk
