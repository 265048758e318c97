#include <algorithm>

#include "common/geometry_index.h"
#include "udk/model.h"

namespace udk {

Drawing augment_2planar(const Drawing& d, int k) {
  require_valid(d, "augment_2planar");
  Drawing out = d;
  ExactFrame frame(out.vertices);
  std::vector<int> count(out.edges.size(), 0);
  for (auto [i, j] : detail::find_crossing_pairs(out, frame)) {
    ++count[i];
    ++count[j];
  }
  for (int c : count) {
    if (c > k) throw PreconditionError("augment_2planar: input is not " + std::to_string(k) + "-plane");
  }

  detail::GridIndex vgrid;
  for (int i = 0; i < out.n(); ++i) vgrid.insert(i, detail::point_box(out.vertices[i]));
  detail::GridIndex egrid;
  for (int i = 0; i < out.e(); ++i) {
    egrid.insert(i, detail::segment_box(out.vertices[out.edges[i].u], out.vertices[out.edges[i].v]));
  }

  std::vector<int> dashed = dashed_edges(out);
  for (const Edge& cand : unit_pairs(d)) {
    detail::Box box = detail::segment_box(out.vertices[cand.u], out.vertices[cand.v]);
    bool ok = true;
    for (int p : vgrid.query(box)) {
      if (p != cand.u && p != cand.v && detail::in_open_segment(frame, p, cand.u, cand.v)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<int> crossed;
    for (int e : egrid.query(box)) {
      const Edge& other = out.edges[e];
      auto c = detail::classify(frame, out.vertices, cand.u, cand.v, other.u, other.v);
      if (c == detail::Contact::proper) {
        crossed.push_back(e);
      } else if (c == detail::Contact::touch || c == detail::Contact::overlap) {
        ok = false;
        break;
      }
    }
    if (!ok || static_cast<int>(crossed.size()) > k) continue;
    if (std::any_of(crossed.begin(), crossed.end(), [&](int e) { return count[e] + 1 > k; })) continue;
    for (int e : crossed) ++count[e];
    int id = out.e();
    out.edges.push_back(cand);
    count.push_back(static_cast<int>(crossed.size()));
    egrid.insert(id, box);
    dashed.push_back(id);
  }
  set_dashed_edges(out, dashed);
  sort_edges(out);
  return out;
}

}  // namespace udk
