#include "gate.h"
#include "udk/arrangement.h"
#include "udk/constructions.h"

namespace udk {

namespace detail {

void construction_gate(const Drawing& d, int k, const std::string& what) {
  ValidationReport v = validate_drawing(d);
  if (!v.valid()) throw ConstructionError(what + ": invalid drawing\n" + v.summary());
  CrossingReport x = crossing_report(d);
  if (!x.is_k_plane(k)) {
    throw ConstructionError(what + ": an edge has " + std::to_string(x.max_crossings_per_edge) +
                            " crossings, more than " + std::to_string(k));
  }
}

}  // namespace detail

Drawing rook_block(const QField& cos, const QField& sin) {
  const std::string what = "rook_block(theta = (" + cos.to_string() + ", " + sin.to_string() + "))";
  if (cos * cos + sin * sin != 1) throw ConstructionError(what + ": (cos, sin) is not a unit vector");
  const Point a[3] = {{0, 0}, {1, 0}, {QField::ratio(1, 2), QField(0, mpq_class(1, 2))}};
  Drawing d;
  for (const auto& ai : a) {
    for (const auto& aj : a) d.vertices.push_back(ai + rotate(aj, cos, sin));
  }
  // Vertex 3i + j: rows share i, columns share j.
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int l = j + 1; l < 3; ++l) {
        d.edges.emplace_back(3 * i + j, 3 * i + l);
        d.edges.emplace_back(3 * j + i, 3 * l + i);
      }
    }
  }
  sort_edges(d);
  d.meta["construction"] = "rook";
  d.meta["theta"] = cos.to_string() + "," + sin.to_string();
  detail::construction_gate(d, 2, what);
  return d;
}

Drawing dodecagon() {
  Drawing h = rook_block();
  std::vector<Drawing> copies;
  Drawing r = h;
  for (int q = 0; q < 4; ++q) {
    copies.push_back(r);
    for (auto& p : r.vertices) p = {-p.y, p.x};
  }
  Drawing merged = merge(copies);
  merged.meta.clear();
  Drawing d = augment_2planar(merged, 2);
  if (d.n() != 29 || d.e() != 72 || d.e() - merged.e() != 4) {
    throw ConstructionError("dodecagon: got " + std::to_string(d.n()) + " vertices and " + std::to_string(d.e()) +
                            " edges (" + std::to_string(d.e() - merged.e()) +
                            " added), expected 29 and 72 with 4 added");
  }
  d.meta["construction"] = "dodecagon";
  detail::construction_gate(d, 2, "dodecagon");
  return d;
}

}  // namespace udk
