#include "common/geometry_index.h"

#include <algorithm>
#include <cmath>

namespace udk::detail {

namespace {

bool on_closed_segment(const ExactFrame& f, int p, int a, int b) {
  return f.dot_sign(a, p, a, b) >= 0 && f.dot_sign(b, p, b, a) >= 0;
}

Contact classify_collinear(std::span<const Point> pts, int a, int b, int c, int d) {
  Point r = pts[b] - pts[a];
  QField rr = dot(r, r);
  QField tc = dot(pts[c] - pts[a], r) / rr;
  QField td = dot(pts[d] - pts[a], r) / rr;
  if (td < tc) std::swap(tc, td);
  QField lo = tc > QField(0) ? tc : QField(0);
  QField hi = td < QField(1) ? td : QField(1);
  if (hi > lo) return Contact::overlap;
  if (hi == lo) return Contact::touch;
  return Contact::none;
}

constexpr std::int64_t kMaxSpan = 64;
constexpr double kMaxCell = 1e9;

}  // namespace

Contact classify(const ExactFrame& f, std::span<const Point> pts, int a, int b, int c, int d) {
  int shared = (a == c) + (a == d) + (b == c) + (b == d);
  if (shared >= 2) return Contact::overlap;
  if (shared == 1) {
    int s = (a == c || a == d) ? a : b;
    int p = s == a ? b : a;
    int q = (c == s) ? d : c;
    if (f.orient(s, p, q) == 0 && f.dot_sign(s, p, s, q) > 0) return Contact::overlap;
    return Contact::shared_endpoint;
  }
  int o1 = f.orient(a, b, c);
  int o2 = f.orient(a, b, d);
  int o3 = f.orient(c, d, a);
  int o4 = f.orient(c, d, b);
  if (o1 == 0 && o2 == 0) return classify_collinear(pts, a, b, c, d);
  if (o1 * o2 < 0 && o3 * o4 < 0) return Contact::proper;
  if (o1 * o2 > 0 || o3 * o4 > 0) return Contact::none;
  if ((o1 == 0 && on_closed_segment(f, c, a, b)) || (o2 == 0 && on_closed_segment(f, d, a, b)) ||
      (o3 == 0 && on_closed_segment(f, a, c, d)) || (o4 == 0 && on_closed_segment(f, b, c, d))) {
    return Contact::touch;
  }
  return Contact::none;
}

bool in_open_segment(const ExactFrame& f, int p, int a, int b) {
  return f.orient(a, b, p) == 0 && f.dot_sign(a, p, a, b) > 0 && f.dot_sign(b, p, b, a) > 0;
}

Crossing2 crossing_point(const Point& a, const Point& b, const Point& c, const Point& d) {
  Point r = b - a;
  Point q = d - c;
  Point ca = c - a;
  QField den = cross(r, q);
  QField t = cross(ca, q) / den;
  QField s = cross(ca, r) / den;
  return {Point{a.x + t * r.x, a.y + t * r.y}, t, s};
}

Box point_box(const Point& p) {
  double x = p.x.to_double();
  double y = p.y.to_double();
  double pad = 1e-7 * (1.0 + std::max(std::abs(x), std::abs(y)));
  return {x - pad, y - pad, x + pad, y + pad};
}

Box segment_box(const Point& a, const Point& b) {
  Box p = point_box(a);
  Box q = point_box(b);
  return {std::min(p.x0, q.x0), std::min(p.y0, q.y0), std::max(p.x1, q.x1), std::max(p.y1, q.y1)};
}

bool GridIndex::cells_of(const Box& box, std::int64_t& cx0, std::int64_t& cy0, std::int64_t& cx1,
                         std::int64_t& cy1) const {
  double lo[2] = {box.x0 / cell_, box.y0 / cell_};
  double hi[2] = {box.x1 / cell_, box.y1 / cell_};
  for (int i = 0; i < 2; ++i) {
    if (!(std::abs(lo[i]) < kMaxCell && std::abs(hi[i]) < kMaxCell)) return false;
  }
  cx0 = static_cast<std::int64_t>(std::floor(lo[0]));
  cy0 = static_cast<std::int64_t>(std::floor(lo[1]));
  cx1 = static_cast<std::int64_t>(std::floor(hi[0]));
  cy1 = static_cast<std::int64_t>(std::floor(hi[1]));
  return cx1 - cx0 < kMaxSpan && cy1 - cy0 < kMaxSpan;
}

void GridIndex::insert(int id, const Box& box) {
  std::int64_t cx0, cy0, cx1, cy1;
  if (!cells_of(box, cx0, cy0, cx1, cy1)) {
    overflow_.push_back(id);
    return;
  }
  for (auto cx = cx0; cx <= cx1; ++cx) {
    for (auto cy = cy0; cy <= cy1; ++cy) cells_[key(cx, cy)].push_back(id);
  }
}

std::vector<int> GridIndex::query(const Box& box) const {
  std::vector<int> out(overflow_);
  std::int64_t cx0, cy0, cx1, cy1;
  if (!cells_of(box, cx0, cy0, cx1, cy1)) {
    for (const auto& [k, ids] : cells_) out.insert(out.end(), ids.begin(), ids.end());
  } else {
    for (auto cx = cx0; cx <= cx1; ++cx) {
      for (auto cy = cy0; cy <= cy1; ++cy) {
        auto it = cells_.find(key(cx, cy));
        if (it != cells_.end()) out.insert(out.end(), it->second.begin(), it->second.end());
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::pair<int, int>> GridIndex::candidate_pairs() const {
  std::vector<std::pair<int, int>> out;
  std::vector<int> all;
  for (const auto& [k, ids] : cells_) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        out.emplace_back(std::min(ids[i], ids[j]), std::max(ids[i], ids[j]));
      }
    }
    if (!overflow_.empty()) all.insert(all.end(), ids.begin(), ids.end());
  }
  all.insert(all.end(), overflow_.begin(), overflow_.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  for (int o : overflow_) {
    for (int id : all) {
      if (id != o) out.emplace_back(std::min(o, id), std::max(o, id));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace udk::detail
