#pragma once

#include <compare>
#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "udk/numeric.h"

namespace udk {

/// Undirected edge between vertex indices, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Straight-line drawing: vertex coordinates, edges and free-form tags.
///
/// Meta keys in use: "construction", "k", "A", "theta" and "dashed" (comma
/// separated edge indices rendered with dashed strokes).
struct Drawing {
  std::vector<Point> vertices;
  std::vector<Edge> edges;
  std::map<std::string, std::string> meta;

  int n() const { return static_cast<int>(vertices.size()); }
  int e() const { return static_cast<int>(edges.size()); }

  friend bool operator==(const Drawing&, const Drawing&) = default;
};

/// Edge indices listed under meta["dashed"].
std::vector<int> dashed_edges(const Drawing& d);
void set_dashed_edges(Drawing& d, std::vector<int> indices);
/// Sorts edges lexicographically, remapping the dashed list.
void sort_edges(Drawing& d);

struct ValidationReport {
  std::vector<int> malformed_edges;                    // i == j or out of range
  std::vector<int> non_unit_edges;                     // squared length != 1
  std::vector<std::pair<int, int>> coincident_vertices;
  std::vector<std::pair<int, int>> duplicate_edges;    // pairs of edge indices
  std::vector<std::pair<int, int>> vertex_in_edge;     // (vertex, edge)
  std::vector<std::pair<int, int>> overlapping_edges;  // pairs of edge indices

  bool valid() const;
  /// One line per non-empty failure list.
  std::string summary() const;
};

ValidationReport validate_drawing(const Drawing& d);
/// Throws ValidationError carrying the summary when `d` is not valid.
void require_valid(const Drawing& d, const std::string& context);

/// Union of drawings with exact vertex and edge deduplication. Vertices keep
/// first-occurrence order; edges are sorted.
Drawing merge(const std::vector<Drawing>& parts);

/// Non-adjacent vertex pairs at squared distance exactly 1, sorted.
std::vector<Edge> unit_pairs(const Drawing& d);

/// Adds unit pairs in lexicographic order, keeping each one only if the
/// drawing stays valid and every edge has at most k crossings. The added
/// edges are appended to the dashed list.
Drawing augment_2planar(const Drawing& d, int k);

// File codec ("udg-drawing/1").

struct LoadResult {
  Drawing drawing;
  /// Non-fatal observations such as unreduced fractions normalized on load.
  std::vector<std::string> notes;
};

LoadResult parse_drawing(const std::string& text, const std::string& source = "<memory>");
LoadResult load_drawing(const std::filesystem::path& path);
/// Canonical serialization: reduced fractions, i < j, sorted edges.
std::string serialize_drawing(const Drawing& d);
void save_drawing(const std::filesystem::path& path, const Drawing& d);

/// SVG picture of the drawing; `scale` is pixels per unit length.
std::string render_svg(const Drawing& d, double scale);

}  // namespace udk
