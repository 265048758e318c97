#include <map>
#include <sstream>

#include "common/geometry_index.h"
#include "udk/model.h"

namespace udk {

namespace {

template <typename T>
void list_line(std::ostringstream& os, const char* label, const std::vector<T>& items) {
  if (items.empty()) return;
  os << label << " (" << items.size() << "):";
  std::size_t shown = 0;
  for (const auto& it : items) {
    if (shown++ == 8) {
      os << " ...";
      break;
    }
    if constexpr (std::is_same_v<T, int>) {
      os << ' ' << it;
    } else {
      os << " (" << it.first << ',' << it.second << ')';
    }
  }
  os << '\n';
}

}  // namespace

bool ValidationReport::valid() const {
  return malformed_edges.empty() && non_unit_edges.empty() && coincident_vertices.empty() &&
         duplicate_edges.empty() && vertex_in_edge.empty() && overlapping_edges.empty();
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  list_line(os, "malformed edges", malformed_edges);
  list_line(os, "non-unit edges", non_unit_edges);
  list_line(os, "coincident vertices", coincident_vertices);
  list_line(os, "duplicate edges", duplicate_edges);
  list_line(os, "vertex inside edge", vertex_in_edge);
  list_line(os, "overlapping edges", overlapping_edges);
  std::string s = os.str();
  return s.empty() ? "valid\n" : s;
}

ValidationReport validate_drawing(const Drawing& d) {
  ValidationReport r;
  const int n = d.n();
  std::vector<bool> well_formed(d.edges.size(), false);
  for (int i = 0; i < d.e(); ++i) {
    const Edge& e = d.edges[i];
    if (e.u < 0 || e.v >= n || e.u == e.v) {
      r.malformed_edges.push_back(i);
      continue;
    }
    well_formed[i] = true;
    if (squared_distance(d.vertices[e.u], d.vertices[e.v]) != QField(1)) {
      r.non_unit_edges.push_back(i);
    }
  }

  std::map<Point, int, PointRepLess> seen;
  for (int i = 0; i < n; ++i) {
    auto [it, inserted] = seen.try_emplace(d.vertices[i], i);
    if (!inserted) r.coincident_vertices.emplace_back(it->second, i);
  }

  std::map<Edge, int> first_edge;
  for (int i = 0; i < d.e(); ++i) {
    if (!well_formed[i]) continue;
    auto [it, inserted] = first_edge.try_emplace(d.edges[i], i);
    if (!inserted) r.duplicate_edges.emplace_back(it->second, i);
  }

  ExactFrame frame(d.vertices);
  detail::GridIndex vgrid;
  for (int i = 0; i < n; ++i) vgrid.insert(i, detail::point_box(d.vertices[i]));
  detail::GridIndex egrid;
  for (int i = 0; i < d.e(); ++i) {
    if (!well_formed[i]) continue;
    const Edge& e = d.edges[i];
    detail::Box box = detail::segment_box(d.vertices[e.u], d.vertices[e.v]);
    egrid.insert(i, box);
    for (int p : vgrid.query(box)) {
      if (p == e.u || p == e.v) continue;
      if (detail::in_open_segment(frame, p, e.u, e.v)) r.vertex_in_edge.emplace_back(p, i);
    }
  }
  for (auto [i, j] : egrid.candidate_pairs()) {
    const Edge &a = d.edges[i], &b = d.edges[j];
    if (a == b) continue;  // reported as duplicate
    if (detail::classify(frame, d.vertices, a.u, a.v, b.u, b.v) == detail::Contact::overlap) {
      r.overlapping_edges.emplace_back(i, j);
    }
  }
  std::sort(r.vertex_in_edge.begin(), r.vertex_in_edge.end());
  return r;
}

void require_valid(const Drawing& d, const std::string& context) {
  ValidationReport r = validate_drawing(d);
  if (!r.valid()) throw ValidationError(context + ": invalid drawing\n" + r.summary());
}

}  // namespace udk
