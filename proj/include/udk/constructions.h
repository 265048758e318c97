#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "udk/model.h"

namespace udk {

// Integer helpers for the closed formulas.

/// floor(sqrt(x)) for x >= 0.
std::int64_t isqrt_floor(std::int64_t x);
/// ceil(sqrt(x)) for x >= 0.
std::int64_t isqrt_ceil(std::int64_t x);
/// floor(a / b) for b > 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b);

/// floor(3n - sqrt(12n - 3)): the matchstick maximum.
std::int64_t u0(std::int64_t n);
/// 3n - floor(sqrt(12n - 3)), the form with the floor on the root alone.
std::int64_t u0_printed(std::int64_t n);
/// floor(3n - sqrt(192n/23 - 23088/529)), exact for completed layers.
std::int64_t layer_floor(std::int64_t n);
/// floor(3n - sqrt(192n/23 - 23088/529) - 13683/23), the lower bound for all n >= 179.
std::int64_t spiral_floor(std::int64_t n);

/// Counts of the layered dodecagon grid.
struct ConstructionParams {
  int k = 1;             // completed layers
  std::int64_t n = 0;    // target vertex count
  std::int64_t A = 0;    // vertices beyond the completed layers
  std::int64_t h = 0;    // dodecagons in the completed layers, 3k^2 - 3k + 1
  std::int64_t c1 = 0;   // coinciding edge pairs, 3h - 6k + 3
  std::int64_t c2 = 0;   // boundary gray edges, 6(k - 1)
};

std::int64_t grid_vertices(int k);  // 69k^2 - 57k + 17
std::int64_t grid_edges(int k);     // 207k^2 - 195k + 60
ConstructionParams params_for_layers(int k);
/// Largest k with grid_vertices(k) <= n; requires n >= 29.
ConstructionParams params_for_vertices(std::int64_t n);

/// 3x3 rook's graph p_ij = a_i + b_j with a the unit triangle
/// {(0,0), (1,0), (1/2, sqrt3/2)} and b = a rotated by (cos, sin).
/// Throws ConstructionError when the result is not a valid 2-plane drawing.
Drawing rook_block(const QField& cos = QField(0, mpq_class(1, 2)), const QField& sin = QField::ratio(1, 2));

/// Four copies of the rook block rotated about its corner by multiples of
/// 90 degrees, closed up by four extra unit edges: 29 vertices, 72 edges.
Drawing dodecagon();

/// h = 3k^2 - 3k + 1 dodecagons on a hexagonal pattern laid out along a
/// spiral from the center, plus one gray edge between neighboring boundary
/// dodecagons. Throws ConstructionError when the counts differ from the
/// closed formulas.
Drawing dodecagon_grid(int k);

/// Completed layers for the largest fitting k, then the remaining vertices
/// along the next layer, one dodecagon at a time. Requires n >= 29.
Drawing spiral_construction(std::int64_t n);

/// n points of the triangular lattice grown greedily from a center, each new
/// point taking the most unit neighbors (ties by spiral position).
Drawing triangular_hexagon(int n);

/// triangular_hexagon(n/2) together with its translate by `shift` and the
/// n/2 translation edges. Throws ConstructionError when the result is not a
/// valid 3-plane drawing.
Drawing shifted_lattice(int n, const Point& shift = {QField::ratio(3, 5), QField::ratio(4, 5)});

struct BoundTable {
  std::int64_t n = 0;
  std::int64_t u0 = 0;          // floor(3n - sqrt(12n - 3))
  std::int64_t u0_printed = 0;  // 3n - floor(sqrt(12n - 3))
  double u1_upper = 0;          // 3n - sqrt(n) / 100
  std::int64_t u2_upper = 0;    // 4n - 8
  std::int64_t e1 = 0;          // 4n - 8
  std::int64_t e2_upper = 0;    // 5n - 10
  std::optional<std::int64_t> spiral_floor;  // n >= 179
  std::optional<std::int64_t> layer_floor;   // n >= 6
  std::optional<std::int64_t> spiral_edges;  // edges of spiral_construction(n)
  std::optional<std::int64_t> hexagon_edges; // edges of triangular_hexagon(n)
  std::optional<std::int64_t> margin;        // spiral_edges - u0
};

/// Evaluates the formulas; construction counts are filled in when n is at
/// most `construction_limit`.
BoundTable bound_table(std::int64_t n, std::int64_t construction_limit = 20000);

}  // namespace udk
