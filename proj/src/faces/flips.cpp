#include <algorithm>

#include "udk/faces.h"

namespace udk {

namespace {

struct Snapshot {
  SplitGeometry geo;
  FaceDecomposition fd;
  HalfedgeResult hr;
  std::vector<BadTriangle> bad;
};

Snapshot analyze(const Drawing& d, const PlaneSplit& s, const CrossingReport& x) {
  Snapshot snap;
  snap.geo = split_geometry(d, s, x);
  snap.fd = face_decomposition(d, snap.geo);
  snap.hr = halfedge_extraction(d, s, snap.geo);
  snap.bad = bad_triangle_classify(d, s, snap.geo, snap.fd, snap.hr);
  return snap;
}

PlaneSplit rebuild(const Drawing& d, std::vector<bool> in_e0, int flips, int readded) {
  PlaneSplit s;
  s.in_e0 = std::move(in_e0);
  for (int e = 0; e < d.e(); ++e) (s.in_e0[e] ? s.e0 : s.e1).push_back(e);
  s.flips = flips;
  s.readded = readded;
  return s;
}

}  // namespace

PlaneSplit flip_repair(const Drawing& d, PlaneSplit split) {
  const CrossingReport x = crossing_report(d);
  std::vector<std::vector<int>> conflicts(d.edges.size());
  for (const auto& c : x.crossings) {
    conflicts[c.e1].push_back(c.e2);
    conflicts[c.e2].push_back(c.e1);
  }
  auto crosses_e0 = [&](const std::vector<bool>& in_e0, int e) {
    return std::any_of(conflicts[e].begin(), conflicts[e].end(), [&](int f) { return in_e0[f]; });
  };

  for (;;) {
    // A flip can leave E1 edges that only crossed the removed edges without
    // any E0 crossing; take them into E0 before the next round.
    std::vector<bool> maximal = split.in_e0;
    int added = 0;
    for (int e : split.e1) {
      if (!crosses_e0(maximal, e)) {
        maximal[e] = true;
        ++added;
      }
    }
    if (added > 0) split = rebuild(d, std::move(maximal), split.flips, split.readded + added);

    Snapshot snap = analyze(d, split, x);
    auto it = std::find_if(snap.bad.begin(), snap.bad.end(), [](const BadTriangle& b) { return b.type <= 3; });
    if (it == snap.bad.end()) return split;

    const BadTriangle& b = *it;
    const Halfedge& alpha = snap.hr.halfedges[b.alpha];
    const Halfedge& beta = snap.hr.halfedges[b.beta];
    std::vector<int> out, in;
    switch (b.type) {
      case 1:
        out = {b.e};
        in = {alpha.edge};
        break;
      case 2: {
        auto free_of_others = [&](int edge) {
          return std::all_of(snap.geo.e0_hits[edge].begin(), snap.geo.e0_hits[edge].end(),
                             [&](const auto& hit) { return hit.second == b.e; });
        };
        out = {b.e};
        in = {free_of_others(alpha.edge) ? alpha.edge : beta.edge};
        break;
      }
      default:
        out = {b.e, b.f};
        in = {alpha.edge, beta.edge};
        break;
    }
    std::vector<bool> in_e0 = split.in_e0;
    for (int e : out) in_e0[e] = false;
    for (int e : in) in_e0[e] = true;
    for (int e : in) {
      if (crosses_e0(in_e0, e)) {
        throw InconsistencyError("flip_repair: type " + std::to_string(b.type) + " flip at face " +
                                 std::to_string(b.face) + " makes edge " + std::to_string(e) + " cross E0");
      }
    }
    PlaneSplit next = rebuild(d, std::move(in_e0), split.flips + 1, split.readded);
    const int before = snap.fd.stats.f3;
    const int after = face_decomposition(d, split_geometry(d, next, x)).stats.f3;
    if (after >= before) {
      throw InconsistencyError("flip_repair: type " + std::to_string(b.type) + " flip at face " +
                               std::to_string(b.face) + " does not reduce triangular faces (" +
                               std::to_string(before) + " -> " + std::to_string(after) + ")");
    }
    split = std::move(next);
  }
}

}  // namespace udk
