#include <algorithm>
#include <map>

#include "gate.h"
#include "layout.h"
#include "udk/arrangement.h"
#include "udk/constructions.h"

namespace udk {

namespace {

Point lattice_point(const detail::Axial& p) {
  return {QField(p[0]) + QField::ratio(p[1], 2), QField(0, mpq_class(p[1], 2))};
}

constexpr detail::Axial kNeighbors[6] = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};

}  // namespace

Drawing triangular_hexagon(int n) {
  if (n < 1) throw PreconditionError("triangular_hexagon: needs n >= 1");
  // Spiral rank of every lattice point within reach.
  int layers = 2;
  while (3 * layers * layers - 3 * layers + 1 < n) ++layers;
  ++layers;
  std::map<detail::Axial, int> rank;
  for (const auto& p : detail::spiral_positions(layers)) rank.emplace(p, static_cast<int>(rank.size()));

  std::map<detail::Axial, int> placed;  // point -> vertex index
  std::map<detail::Axial, int> frontier;  // unplaced point -> placed neighbors
  Drawing d;
  auto place = [&](const detail::Axial& p) {
    int v = d.n();
    placed.emplace(p, v);
    frontier.erase(p);
    d.vertices.push_back(lattice_point(p));
    for (const auto& dir : kNeighbors) {
      detail::Axial q{p[0] + dir[0], p[1] + dir[1]};
      auto it = placed.find(q);
      if (it != placed.end() && it->second != v) {
        d.edges.emplace_back(it->second, v);
      } else if (it == placed.end()) {
        ++frontier[q];
      }
    }
  };
  place({0, 0});
  while (d.n() < n) {
    const detail::Axial* best = nullptr;
    int best_score = -1, best_rank = 0;
    for (const auto& [q, score] : frontier) {
      int r = rank.at(q);
      if (score > best_score || (score == best_score && r < best_rank)) {
        best = &q;
        best_score = score;
        best_rank = r;
      }
    }
    place(detail::Axial(*best));
  }
  sort_edges(d);
  d.meta["construction"] = "hexlattice";
  d.meta["n"] = std::to_string(n);
  return d;
}

Drawing shifted_lattice(int n, const Point& shift) {
  if (n < 6 || n % 2 != 0) throw PreconditionError("shifted_lattice: needs an even n >= 6");
  const std::string what = "shifted_lattice(" + std::to_string(n) + ", shift = (" + shift.x.to_string() + ", " +
                           shift.y.to_string() + "))";
  if (squared_norm(shift) != 1) throw ConstructionError(what + ": shift is not a unit vector");
  const int half = n / 2;
  Drawing base = triangular_hexagon(half);
  Drawing d = base;
  for (const auto& p : base.vertices) d.vertices.push_back(p + shift);
  for (const auto& e : base.edges) d.edges.emplace_back(e.u + half, e.v + half);
  std::vector<int> dashed;
  for (int i = 0; i < half; ++i) {
    dashed.push_back(d.e());
    d.edges.emplace_back(i, i + half);
  }
  set_dashed_edges(d, std::move(dashed));
  sort_edges(d);
  d.meta["construction"] = "shifted";
  d.meta["n"] = std::to_string(n);
  d.meta["shift"] = shift.x.to_string() + "," + shift.y.to_string();
  detail::construction_gate(d, 3, what);
  return d;
}

}  // namespace udk
