#include "layout.h"

#include <algorithm>

namespace udk::detail {

namespace {

constexpr Axial kDirections[6] = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};

}  // namespace

std::vector<Axial> ring_positions(int r) {
  std::vector<Axial> out;
  for (int i = 0; i < 6; ++i) {
    const Axial& corner = kDirections[(6 - i) % 6];
    const Axial& step = kDirections[(4 - i + 6) % 6];
    for (int s = 0; s < r; ++s) out.push_back({r * corner[0] + s * step[0], r * corner[1] + s * step[1]});
  }
  std::rotate(out.begin(), out.begin() + 1, out.end());
  return out;
}

std::vector<Axial> spiral_positions(int layers) {
  std::vector<Axial> out;
  if (layers >= 1) out.push_back({0, 0});
  for (int r = 1; r < layers; ++r) {
    auto ring = ring_positions(r);
    out.insert(out.end(), ring.begin(), ring.end());
  }
  return out;
}

}  // namespace udk::detail
