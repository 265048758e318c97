#include <cmath>

#include "udk/constructions.h"

namespace udk {

std::int64_t isqrt_floor(std::int64_t x) {
  if (x < 0) throw PreconditionError("isqrt_floor: negative argument");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(x)));
  while (static_cast<__int128>(r) * r > x) --r;
  while (static_cast<__int128>(r + 1) * (r + 1) <= x) ++r;
  return r;
}

std::int64_t isqrt_ceil(std::int64_t x) {
  std::int64_t r = isqrt_floor(x);
  return r * r == x ? r : r + 1;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  return (a % b != 0 && a < 0) ? q - 1 : q;
}

std::int64_t u0(std::int64_t n) { return 3 * n - isqrt_ceil(12 * n - 3); }

std::int64_t u0_printed(std::int64_t n) { return 3 * n - isqrt_floor(12 * n - 3); }

// 192n/23 - 23088/529 = (4416n - 23088) / 23^2, so both bounds reduce to
// floor((P - sqrt(M)) / 23) = floor((P - ceil(sqrt(M))) / 23).
std::int64_t layer_floor(std::int64_t n) {
  if (4416 * n < 23088) throw PreconditionError("layer_floor: needs n >= 6");
  return floor_div(69 * n - isqrt_ceil(4416 * n - 23088), 23);
}

std::int64_t spiral_floor(std::int64_t n) {
  if (4416 * n < 23088) throw PreconditionError("spiral_floor: needs n >= 6");
  return floor_div(69 * n - 13683 - isqrt_ceil(4416 * n - 23088), 23);
}

std::int64_t grid_vertices(int k) { return 69LL * k * k - 57LL * k + 17; }

std::int64_t grid_edges(int k) { return 207LL * k * k - 195LL * k + 60; }

ConstructionParams params_for_layers(int k) {
  if (k < 1) throw PreconditionError("params_for_layers: k must be at least 1");
  ConstructionParams p;
  p.k = k;
  p.n = grid_vertices(k);
  p.h = 3LL * k * k - 3LL * k + 1;
  p.c1 = 3 * p.h - 6LL * k + 3;
  p.c2 = 6LL * (k - 1);
  return p;
}

ConstructionParams params_for_vertices(std::int64_t n) {
  if (n < 29) throw PreconditionError("params_for_vertices: needs n >= 29");
  int k = 1;
  while (grid_vertices(k + 1) <= n) ++k;
  ConstructionParams p = params_for_layers(k);
  p.A = n - p.n;
  p.n = n;
  return p;
}

BoundTable bound_table(std::int64_t n, std::int64_t construction_limit) {
  if (n < 3) throw PreconditionError("bound_table: needs n >= 3");
  BoundTable t;
  t.n = n;
  t.u0 = u0(n);
  t.u0_printed = u0_printed(n);
  t.u1_upper = 3.0 * static_cast<double>(n) - std::sqrt(static_cast<double>(n)) / 100.0;
  t.u2_upper = 4 * n - 8;
  t.e1 = 4 * n - 8;
  t.e2_upper = 5 * n - 10;
  if (n >= 6) t.layer_floor = layer_floor(n);
  if (n >= 179) t.spiral_floor = spiral_floor(n);
  if (n <= construction_limit) {
    t.hexagon_edges = triangular_hexagon(static_cast<int>(n)).e();
    if (n >= 29) {
      t.spiral_edges = spiral_construction(n).e();
      t.margin = *t.spiral_edges - t.u0;
    }
  }
  return t;
}

}  // namespace udk
