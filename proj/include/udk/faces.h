#pragma once

#include <optional>
#include <string>
#include <vector>

#include "udk/arrangement.h"
#include "udk/model.h"

namespace udk {

/// Partition of the edges of a drawing into a crossing-free part E0 and the
/// rest E1. Both lists hold edge indices of the parent drawing, ascending.
struct PlaneSplit {
  std::vector<int> e0;
  std::vector<int> e1;
  /// Per edge: true when it belongs to E0.
  std::vector<bool> in_e0;
  /// Number of flips applied by flip_repair.
  int flips = 0;
  /// Edges added back after flips left an E1 edge uncrossed by E0.
  int readded = 0;

  int size0() const { return static_cast<int>(e0.size()); }
  int size1() const { return static_cast<int>(e1.size()); }
};

enum class SplitMode { exact, greedy };

struct SplitOptions {
  SplitMode mode = SplitMode::exact;
  /// Exact mode refuses conflict graphs with more crossed edges than this.
  int size_limit = 5000;
  /// Exact mode gives up after this many search nodes.
  long node_budget = 2'000'000;
  bool repair = true;
};

/// Builds E0 from a maximum (exact) or lexicographically greedy (greedy)
/// independent set of the crossing conflict graph, then runs flip_repair.
/// Throws SizeLimitError when the exact search is out of bounds.
PlaneSplit plane_subgraph(const Drawing& d, const SplitOptions& opt = {});

/// Split with the given E0 edge list (validated to be crossing-free).
PlaneSplit make_split(const Drawing& d, std::vector<int> e0);

/// Everything derived from one split: the plane graph of E0 on all vertices,
/// its faces and the crossings of every E1 edge with E0.
struct SplitGeometry {
  PlaneGraph graph;
  FaceStructure faces;
  CrossingReport crossings;  // of the whole drawing
  /// Per edge of E1, its crossings with E0 as (parameter, E0 edge), by parameter.
  std::vector<std::vector<std::pair<QField, int>>> e0_hits;
};

SplitGeometry split_geometry(const Drawing& d, const PlaneSplit& split);
SplitGeometry split_geometry(const Drawing& d, const PlaneSplit& split, CrossingReport crossings);

struct Face {
  std::vector<std::vector<int>> walks;  // vertex sequences
  std::vector<int> walk_edges;          // bounding edges with multiplicity
  std::vector<int> isolated;
  int size = 0;      // |Phi|
  int distinct = 0;  // l(Phi)
  int m = 0;         // boundary components, isolated vertices included
  int t = 0;         // |Phi| + 3m - 6
  int h = 0;         // halfedges inside
  bool bounded = false;
};

struct FaceStats {
  int f3 = 0;
  long f_ge5 = 0;  // sum of |Phi| over faces with |Phi| >= 5
};

struct FaceDecomposition {
  std::vector<Face> faces;  // indexed like FaceStructure regions
  FaceStats stats;
};

/// Faces of E0 (h left at zero; see halfedge_extraction).
FaceDecomposition face_decomposition(const Drawing& d, const PlaneSplit& split);
FaceDecomposition face_decomposition(const Drawing& d, const SplitGeometry& geo);

struct GtBoundCheck {
  int n = 0;
  int e = 0;
  FaceStats stats;
  bool p1 = false;  // e <= 3n - F>=5 / 10
  bool p2 = false;  // e <= 3n - sqrt(f3) / 5
  double slack1 = 0;
  double slack2 = 0;
};

GtBoundCheck gt_bound_check(const Drawing& d, const PlaneSplit& split);

/// Portion of an E1 edge between one endpoint and its nearest crossing with
/// an E0 edge.
struct Halfedge {
  int edge = 0;        // parent E1 edge
  int vertex = 0;      // endpoint
  int first_hit = 0;   // first crossed E0 edge
  QField t_end;        // parameter of that crossing along the parent edge
  int face = 0;        // containing face (region index)
  int partner = -1;    // halfedge crossing this one, if any
};

struct HalfedgeResult {
  std::vector<Halfedge> halfedges;  // two per E1 edge: from u, then from v
  std::vector<int> per_face;
};

/// Throws InconsistencyError when some E1 edge does not cross E0.
HalfedgeResult halfedge_extraction(const Drawing& d, const PlaneSplit& split);
HalfedgeResult halfedge_extraction(const Drawing& d, const PlaneSplit& split, const SplitGeometry& geo);

/// Triangular face with connected boundary holding two halfedges.
struct BadTriangle {
  int face = 0;
  int type = 0;  // 1..4
  std::array<int, 3> corners{};
  int alpha = 0;  // halfedge indices
  int beta = 0;
  /// Type 1: the triangle side crossed by alpha. Types 2-4: the side both cross.
  int e = -1;
  int f = -1;   // type 3: the common second edge
  int f1 = -1;  // type 4: the other E0 edges crossed by alpha and beta
  int f2 = -1;
};

/// Throws InconsistencyError for a triangular face with three or more halfedges.
std::vector<BadTriangle> bad_triangle_classify(const Drawing& d, const PlaneSplit& split);
std::vector<BadTriangle> bad_triangle_classify(const Drawing& d, const PlaneSplit& split,
                                               const SplitGeometry& geo, const FaceDecomposition& fd,
                                               const HalfedgeResult& hr);

/// Applies type 1-3 flips until none is left. Before each round, E1 edges
/// that no longer cross E0 are added to it. Every flip must keep E0
/// crossing-free and lower the number of triangular faces
/// (InconsistencyError otherwise).
PlaneSplit flip_repair(const Drawing& d, PlaneSplit split);

struct ChargeRecord {
  int size = 0;
  int distinct = 0;
  int m = 0;
  int t = 0;
  int h = 0;
  long charge = 0;
  long final_charge = 0;
  bool bounded = false;
};

struct Transfer {
  int to = 0;    // bad triangle face
  int from = 0;  // helper face
};

struct DischargingAudit {
  std::vector<ChargeRecord> faces;
  std::vector<Transfer> transfers;
  std::vector<BadTriangle> bad_triangles;
  int n = 0, e = 0, e0 = 0, e1 = 0;
  long total_charge = 0;
  long total_final = 0;
  long sum_size_minus_2 = 0;
  bool halfedge_bound = false;  // verdict (a)
  bool charges_nonnegative = false;  // verdict (b)
  bool edge_bound = false;  // verdict (c)
  std::vector<std::string> violations;

  bool passed() const { return halfedge_bound && charges_nonnegative && edge_bound && violations.empty(); }
};

/// Charges, helper transfers and the three verdicts for a repaired split.
/// Requires a 2-plane drawing on at least 3 vertices (PreconditionError
/// otherwise).
DischargingAudit discharging_audit(const Drawing& d, const PlaneSplit& split);

/// Removes, for every crossing in edge-pair order, the first edge unless one
/// of the two is already gone.
Drawing matchstick_reduction(const Drawing& d);

}  // namespace udk
