#pragma once

// Internal helpers shared by the model, arrangement and faces modules:
// exact segment contact classification and a uniform-grid candidate index.
// The grid only proposes candidates from conservatively padded floating
// bounding boxes; every decision is made by the exact predicates.

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "udk/model.h"
#include "udk/numeric.h"

namespace udk::detail {

enum class Contact {
  none,
  shared_endpoint,  // only the common endpoint
  proper,           // interiors cross at a single point
  touch,            // an endpoint lies on the other segment, or endpoints coincide
  overlap,          // collinear with a common piece of positive length
};

/// Contact between segments (a, b) and (c, d) given as vertex indices.
Contact classify(const ExactFrame& frame, std::span<const Point> pts, int a, int b, int c, int d);

/// Whether vertex p lies in the open segment (a, b).
bool in_open_segment(const ExactFrame& frame, int p, int a, int b);

struct Crossing2 {
  Point point;
  QField t1;  // parameter along (a, b)
  QField t2;  // parameter along (c, d)
};

/// Intersection point of two properly crossing segments.
Crossing2 crossing_point(const Point& a, const Point& b, const Point& c, const Point& d);

struct Box {
  double x0, y0, x1, y1;
};

/// Padded floating bounding box of the exact segment (a, b).
Box segment_box(const Point& a, const Point& b);
Box point_box(const Point& p);

/// Uniform grid over boxes with unit cells. Items whose box spans too many
/// cells go to an overflow list that is returned by every query.
class GridIndex {
 public:
  explicit GridIndex(double cell = 1.0) : cell_(cell) {}

  void insert(int id, const Box& box);
  /// Ids whose boxes may intersect `box` (deduplicated, ascending).
  std::vector<int> query(const Box& box) const;
  /// All unordered id pairs sharing a cell, ascending and unique.
  std::vector<std::pair<int, int>> candidate_pairs() const;

 private:
  bool cells_of(const Box& box, std::int64_t& cx0, std::int64_t& cy0, std::int64_t& cx1,
                std::int64_t& cy1) const;
  static std::int64_t key(std::int64_t cx, std::int64_t cy) { return (cx << 32) ^ (cy & 0xffffffffLL); }

  double cell_;
  std::unordered_map<std::int64_t, std::vector<int>> cells_;
  std::vector<int> overflow_;
};

/// Properly crossing edge pairs (i < j) in ascending order, found through
/// the grid index. Throws DegenerateInput on touching or overlapping edges.
std::vector<std::pair<int, int>> find_crossing_pairs(const Drawing& d, const ExactFrame& frame);

/// Throws DegenerateInput describing the contact between edges i and j.
[[noreturn]] void throw_degenerate(const Drawing& d, int i, int j, Contact c);

}  // namespace udk::detail
