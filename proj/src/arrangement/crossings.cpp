#include <algorithm>
#include <cmath>

#include "common/geometry_index.h"
#include "udk/arrangement.h"

namespace udk {

namespace {

CrossingReport assemble(const Drawing& d, const std::vector<std::pair<int, int>>& pairs) {
  CrossingReport r;
  r.per_edge.assign(d.edges.size(), 0);
  r.crossings.reserve(pairs.size());
  for (auto [i, j] : pairs) {
    const Edge &a = d.edges[i], &b = d.edges[j];
    auto x = detail::crossing_point(d.vertices[a.u], d.vertices[a.v], d.vertices[b.u], d.vertices[b.v]);
    r.crossings.push_back({i, j, std::move(x.point), std::move(x.t1), std::move(x.t2)});
    ++r.per_edge[i];
    ++r.per_edge[j];
  }
  for (int c : r.per_edge) r.max_crossings_per_edge = std::max(r.max_crossings_per_edge, c);
  return r;
}

// Oracle side: every pair, decided with plain Q(sqrt3) arithmetic.

bool between_closed(const Point& a, const Point& b, const Point& p) {
  return dot(p - a, b - a).sign() >= 0 && dot(p - b, a - b).sign() >= 0;
}

enum class Verdict { none, cross, degenerate };

Verdict oracle_pair(const Point& a, const Point& b, const Point& c, const Point& dd, bool shared_a,
                    bool shared_b) {
  if (shared_a || shared_b) {
    const Point& s = shared_a ? a : b;
    const Point& p = shared_a ? b : a;
    const Point& q = (c == s) ? dd : c;
    if (orientation(s, p, q) == 0 && dot(p - s, q - s).sign() > 0) return Verdict::degenerate;
    return Verdict::none;
  }
  int o1 = orientation(a, b, c), o2 = orientation(a, b, dd);
  int o3 = orientation(c, dd, a), o4 = orientation(c, dd, b);
  if (o1 == 0 && o2 == 0) {
    bool touching = between_closed(a, b, c) || between_closed(a, b, dd) || between_closed(c, dd, a) ||
                    between_closed(c, dd, b);
    return touching ? Verdict::degenerate : Verdict::none;
  }
  if (o1 * o2 < 0 && o3 * o4 < 0) return Verdict::cross;
  if ((o1 == 0 && between_closed(a, b, c)) || (o2 == 0 && between_closed(a, b, dd)) ||
      (o3 == 0 && between_closed(c, dd, a)) || (o4 == 0 && between_closed(c, dd, b))) {
    return Verdict::degenerate;
  }
  return Verdict::none;
}

}  // namespace

CrossingReport crossing_report(const Drawing& d) {
  ExactFrame frame(d.vertices);
  return assemble(d, detail::find_crossing_pairs(d, frame));
}

CrossingReport oracle_crossings(const Drawing& d) {
  // Floating bounding boxes only skip pairs that are far apart by a margin
  // many orders of magnitude above the conversion error.
  struct Approx {
    double x0, y0, x1, y1;
  };
  std::vector<Approx> boxes;
  for (const auto& e : d.edges) {
    double ax = d.vertices[e.u].x.to_double(), ay = d.vertices[e.u].y.to_double();
    double bx = d.vertices[e.v].x.to_double(), by = d.vertices[e.v].y.to_double();
    double pad = 1e-6 * (1 + std::max({std::abs(ax), std::abs(ay), std::abs(bx), std::abs(by)}));
    boxes.push_back({std::min(ax, bx) - pad, std::min(ay, by) - pad, std::max(ax, bx) + pad,
                     std::max(ay, by) + pad});
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < d.e(); ++i) {
    for (int j = i + 1; j < d.e(); ++j) {
      const Approx &p = boxes[i], &q = boxes[j];
      if (p.x1 < q.x0 || q.x1 < p.x0 || p.y1 < q.y0 || q.y1 < p.y0) continue;
      const Edge &a = d.edges[i], &b = d.edges[j];
      bool sa = a.u == b.u || a.u == b.v;
      bool sb = a.v == b.u || a.v == b.v;
      if (sa && sb) detail::throw_degenerate(d, i, j, detail::Contact::overlap);
      Verdict v = oracle_pair(d.vertices[a.u], d.vertices[a.v], d.vertices[b.u], d.vertices[b.v], sa, sb);
      if (v == Verdict::cross) pairs.emplace_back(i, j);
      if (v == Verdict::degenerate) detail::throw_degenerate(d, i, j, detail::Contact::touch);
    }
  }
  CrossingReport r;
  r.per_edge.assign(d.edges.size(), 0);
  for (auto [i, j] : pairs) {
    const Edge &a = d.edges[i], &b = d.edges[j];
    // Cramer's rule on the two line equations A x + B y = C.
    const Point &p1 = d.vertices[a.u], &p2 = d.vertices[a.v];
    const Point &q1 = d.vertices[b.u], &q2 = d.vertices[b.v];
    QField A1 = p2.y - p1.y, B1 = p1.x - p2.x, C1 = A1 * p1.x + B1 * p1.y;
    QField A2 = q2.y - q1.y, B2 = q1.x - q2.x, C2 = A2 * q1.x + B2 * q1.y;
    QField det = A1 * B2 - A2 * B1;
    Point x{(C1 * B2 - C2 * B1) / det, (A1 * C2 - A2 * C1) / det};
    QField t1 = dot(x - p1, p2 - p1) / squared_norm(p2 - p1);
    QField t2 = dot(x - q1, q2 - q1) / squared_norm(q2 - q1);
    r.crossings.push_back({i, j, std::move(x), std::move(t1), std::move(t2)});
    ++r.per_edge[i];
    ++r.per_edge[j];
  }
  for (int c : r.per_edge) r.max_crossings_per_edge = std::max(r.max_crossings_per_edge, c);
  return r;
}

}  // namespace udk
