#include "udk/faces.h"

namespace udk {

DischargingAudit discharging_audit(const Drawing& d, const PlaneSplit& split) {
  if (d.n() < 3) throw PreconditionError("discharging_audit: needs at least 3 vertices");
  SplitGeometry geo = split_geometry(d, split);
  if (!geo.crossings.is_k_plane(2)) throw PreconditionError("discharging_audit: drawing is not 2-plane");
  FaceDecomposition fd = face_decomposition(d, geo);
  HalfedgeResult hr = halfedge_extraction(d, split, geo);

  DischargingAudit a;
  a.n = d.n();
  a.e = d.e();
  a.e0 = split.size0();
  a.e1 = split.size1();
  a.halfedge_bound = true;
  for (std::size_t i = 0; i < fd.faces.size(); ++i) {
    const Face& f = fd.faces[i];
    ChargeRecord c;
    c.size = f.size;
    c.distinct = f.distinct;
    c.m = f.m;
    c.t = f.t;
    c.h = hr.per_face[i];
    c.charge = 2L * c.t + c.size - 2 - c.h;
    c.final_charge = c.charge;
    c.bounded = f.bounded;
    const bool simple_triangle = f.size == 3 && f.m == 1;
    const long limit = simple_triangle ? 2 : 2L * c.t + c.size - 2;
    if (c.h > limit) {
      a.halfedge_bound = false;
      a.violations.push_back("face " + std::to_string(i) + ": h=" + std::to_string(c.h) + " exceeds " +
                             std::to_string(limit));
    }
    a.total_charge += c.charge;
    a.sum_size_minus_2 += c.size - 2;
    a.faces.push_back(c);
  }

  a.bad_triangles = bad_triangle_classify(d, split, geo, fd, hr);
  const auto& fs = geo.faces;
  for (const auto& b : a.bad_triangles) {
    if (b.type != 4) {
      a.violations.push_back("face " + std::to_string(b.face) + ": bad triangle of type " + std::to_string(b.type) +
                             " left after repair");
      continue;
    }
    // Helper: the face on the other side of e.
    int helper = -1;
    for (int w : fs.regions[b.face].walks) {
      for (int h : fs.walks[w].halfedges) {
        if (geo.graph.segments[h / 2].edge == b.e) helper = fs.region_of_halfedge(FaceStructure::twin(h));
      }
    }
    if (helper == b.face || helper < 0) {
      throw InconsistencyError("discharging_audit: helper of bad triangle " + std::to_string(b.face) +
                               " is the triangle itself");
    }
    if (a.faces[helper].size < 5) {
      a.violations.push_back("face " + std::to_string(helper) + ": helper of bad triangle " + std::to_string(b.face) +
                             " has size " + std::to_string(a.faces[helper].size));
    }
    a.transfers.push_back({b.face, helper});
    a.faces[b.face].final_charge += 1;
    a.faces[helper].final_charge -= 1;
  }

  a.charges_nonnegative = true;
  for (std::size_t i = 0; i < a.faces.size(); ++i) {
    a.total_final += a.faces[i].final_charge;
    if (a.faces[i].final_charge < 0) {
      a.charges_nonnegative = false;
      a.violations.push_back("face " + std::to_string(i) + ": final charge " +
                             std::to_string(a.faces[i].final_charge));
    }
  }
  if (a.total_final != a.total_charge) {
    a.violations.push_back("charge not conserved: " + std::to_string(a.total_charge) + " -> " +
                           std::to_string(a.total_final));
  }
  // e <= 3n - 6 + sum(|Phi| - 2) / 2 <= 4n - 8, doubled to stay integral.
  const long middle2 = 6L * a.n - 12 + a.sum_size_minus_2;
  a.edge_bound = 2L * a.e <= middle2 && middle2 <= 8L * a.n - 16 && a.e <= 4L * a.n - 8;
  if (!a.edge_bound) {
    a.violations.push_back("edge bound: e=" + std::to_string(a.e) + ", 3n-6+sum/2=" +
                           std::to_string(middle2 / 2.0) + ", 4n-8=" + std::to_string(4L * a.n - 8));
  }
  return a;
}

}  // namespace udk
