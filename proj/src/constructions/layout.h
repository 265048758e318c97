#pragma once

#include <array>
#include <vector>

namespace udk::detail {

/// Axial coordinates (a, b) of the triangular lattice: a (1, 0) + b (1/2, sqrt3/2).
using Axial = std::array<int, 2>;

/// Positions of ring r >= 1 of the hexagonal pattern, clockwise. The ring
/// starts right after its +x corner and ends at that corner.
std::vector<Axial> ring_positions(int r);

/// Rings 0..layers-1 concatenated.
std::vector<Axial> spiral_positions(int layers);

}  // namespace udk::detail
