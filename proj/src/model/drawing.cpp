#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include "common/geometry_index.h"
#include "udk/model.h"

namespace udk {

std::vector<int> dashed_edges(const Drawing& d) {
  std::vector<int> out;
  auto it = d.meta.find("dashed");
  if (it == d.meta.end()) return out;
  std::string_view s = it->second;
  while (!s.empty()) {
    auto comma = s.find(',');
    std::string_view tok = s.substr(0, comma);
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) {
      throw ParseError("meta.dashed", "not a comma separated index list: " + it->second);
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

void set_dashed_edges(Drawing& d, std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  if (indices.empty()) {
    d.meta.erase("dashed");
    return;
  }
  std::string s;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(indices[i]);
  }
  d.meta["dashed"] = s;
}

void sort_edges(Drawing& d) {
  std::vector<int> order(d.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return d.edges[a] < d.edges[b]; });
  std::vector<int> new_index(d.edges.size());
  std::vector<Edge> sorted;
  sorted.reserve(d.edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    new_index[order[i]] = static_cast<int>(i);
    sorted.push_back(d.edges[order[i]]);
  }
  std::vector<int> dashed = dashed_edges(d);
  for (int& x : dashed) {
    if (x >= 0 && x < static_cast<int>(new_index.size())) x = new_index[x];
  }
  d.edges = std::move(sorted);
  set_dashed_edges(d, std::move(dashed));
}

Drawing merge(const std::vector<Drawing>& parts) {
  Drawing out;
  std::map<Point, int, PointRepLess> index;
  std::set<Edge> edges;
  for (const auto& part : parts) {
    std::vector<int> remap(part.vertices.size());
    for (std::size_t i = 0; i < part.vertices.size(); ++i) {
      auto [it, inserted] = index.try_emplace(part.vertices[i], out.n());
      if (inserted) out.vertices.push_back(part.vertices[i]);
      remap[i] = it->second;
    }
    for (const auto& e : part.edges) edges.insert(Edge(remap[e.u], remap[e.v]));
  }
  out.edges.assign(edges.begin(), edges.end());
  if (parts.size() == 1) {
    out.meta = parts.front().meta;
    if (out.edges != parts.front().edges) out.meta.erase("dashed");
  }
  return out;
}

std::vector<Edge> unit_pairs(const Drawing& d) {
  detail::GridIndex grid;
  for (int i = 0; i < d.n(); ++i) grid.insert(i, detail::point_box(d.vertices[i]));
  std::set<Edge> existing(d.edges.begin(), d.edges.end());
  std::vector<Edge> out;
  const QField one(1);
  for (int i = 0; i < d.n(); ++i) {
    detail::Box b = detail::point_box(d.vertices[i]);
    b.x0 -= 1.0;
    b.y0 -= 1.0;
    b.x1 += 1.0;
    b.y1 += 1.0;
    for (int j : grid.query(b)) {
      if (j <= i) continue;
      if (squared_distance(d.vertices[i], d.vertices[j]) != one) continue;
      Edge e(i, j);
      if (!existing.count(e)) out.push_back(e);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace udk
