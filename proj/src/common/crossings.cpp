#include "common/geometry_index.h"

namespace udk::detail {

void throw_degenerate(const Drawing& d, int i, int j, Contact c) {
  const Edge &a = d.edges[i], &b = d.edges[j];
  std::string kind = c == Contact::overlap ? "overlap" : "tangential contact";
  throw DegenerateInput(kind + " between edge " + std::to_string(i) + " (" + std::to_string(a.u) +
                        "," + std::to_string(a.v) + ") and edge " + std::to_string(j) + " (" +
                        std::to_string(b.u) + "," + std::to_string(b.v) + ")");
}

std::vector<std::pair<int, int>> find_crossing_pairs(const Drawing& d, const ExactFrame& frame) {
  GridIndex grid;
  for (int i = 0; i < d.e(); ++i) {
    grid.insert(i, segment_box(d.vertices[d.edges[i].u], d.vertices[d.edges[i].v]));
  }
  std::vector<std::pair<int, int>> out;
  for (auto [i, j] : grid.candidate_pairs()) {
    const Edge &a = d.edges[i], &b = d.edges[j];
    Contact c = classify(frame, d.vertices, a.u, a.v, b.u, b.v);
    if (c == Contact::proper) {
      out.emplace_back(i, j);
    } else if (c == Contact::touch || c == Contact::overlap) {
      throw_degenerate(d, i, j, c);
    }
  }
  return out;
}

}  // namespace udk::detail
