#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "udk/model.h"

namespace udk {

namespace {

constexpr const char* kFormat = "udg-drawing/1";
constexpr const char* kField = "Q(sqrt3)";

using nlohmann::json;

bool is_decimal_integer(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + i, s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

mpz_class parse_integer(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where, "expected a decimal integer string");
  const auto& s = j.get_ref<const std::string&>();
  if (!is_decimal_integer(s)) throw ParseError(where, "not a decimal integer: \"" + s + "\"");
  return mpz_class(s, 10);
}

QField parse_coordinate(const json& j, const std::string& where, std::vector<std::string>& notes) {
  if (!j.is_array() || j.size() != 4) {
    throw ParseError(where, "expected [a_num, a_den, b_num, b_den]");
  }
  mpz_class parts[4];
  for (int i = 0; i < 4; ++i) parts[i] = parse_integer(j[i], where + "[" + std::to_string(i) + "]");
  for (int i : {1, 3}) {
    if (parts[i] == 0) throw ParseError(where + "[" + std::to_string(i) + "]", "denominator is zero");
  }
  QField q = QField::from_parts(parts[0], parts[1], parts[2], parts[3]);
  const mpq_class& a = q.rational_part();
  const mpq_class& b = q.sqrt3_part();
  if (a.get_num() != parts[0] || a.get_den() != parts[1] || b.get_num() != parts[2] ||
      b.get_den() != parts[3]) {
    notes.push_back(where + ": non-canonical fractions " + parts[0].get_str() + "/" +
                    parts[1].get_str() + ", " + parts[2].get_str() + "/" + parts[3].get_str() +
                    " normalized to " + q.to_string());
  }
  return q;
}

std::string line_context(const std::string& text, std::size_t byte) {
  std::size_t line = 1 + std::count(text.begin(), text.begin() + std::min(byte, text.size()), '\n');
  return "line " + std::to_string(line);
}

void write_coordinate(std::ostringstream& os, const QField& q) {
  const mpq_class& a = q.rational_part();
  const mpq_class& b = q.sqrt3_part();
  os << "[\"" << a.get_num().get_str() << "\",\"" << a.get_den().get_str() << "\",\""
     << b.get_num().get_str() << "\",\"" << b.get_den().get_str() << "\"]";
}

}  // namespace

LoadResult parse_drawing(const std::string& text, const std::string& source) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source + ": " + line_context(text, e.byte), e.what());
  }
  LoadResult out;
  Drawing& d = out.drawing;
  if (!root.is_object()) throw ParseError(source, "top level must be an object");
  auto field = [&](const char* name) -> const json& {
    auto it = root.find(name);
    if (it == root.end()) throw ParseError(source + ": " + name, "missing field");
    return *it;
  };
  const json& format = field("format");
  if (!format.is_string() || format.get<std::string>() != kFormat) {
    throw ParseError(source + ": format", std::string("expected \"") + kFormat + "\"");
  }
  const json& fld = field("field");
  if (!fld.is_string() || fld.get<std::string>() != kField) {
    throw ParseError(source + ": field", std::string("expected \"") + kField + "\"");
  }

  const json& vertices = field("vertices");
  if (!vertices.is_array()) throw ParseError(source + ": vertices", "expected an array");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    std::string where = source + ": vertices[" + std::to_string(i) + "]";
    const json& v = vertices[i];
    if (!v.is_array() || v.size() != 2) throw ParseError(where, "expected [x, y]");
    d.vertices.push_back(
        {parse_coordinate(v[0], where + "[0]", out.notes), parse_coordinate(v[1], where + "[1]", out.notes)});
  }

  const json& edges = field("edges");
  if (!edges.is_array()) throw ParseError(source + ": edges", "expected an array");
  bool flipped = false;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::string where = source + ": edges[" + std::to_string(i) + "]";
    const json& e = edges[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw ParseError(where, "expected [i, j] with integer indices");
    }
    long long a = e[0].get<long long>();
    long long b = e[1].get<long long>();
    if (a < 0 || b < 0 || a >= d.n() || b >= d.n()) throw ParseError(where, "vertex index out of range");
    if (a == b) throw ParseError(where, "loop edge");
    if (a > b) flipped = true;
    d.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  if (flipped) out.notes.push_back(source + ": edges with i > j normalized");

  if (auto it = root.find("meta"); it != root.end()) {
    if (!it->is_object()) throw ParseError(source + ": meta", "expected a string map");
    for (const auto& [k, v] : it->items()) {
      if (!v.is_string()) throw ParseError(source + ": meta." + k, "expected a string value");
      d.meta[k] = v.get<std::string>();
    }
  }
  for (int idx : dashed_edges(d)) {
    if (idx < 0 || idx >= d.e()) throw ParseError(source + ": meta.dashed", "edge index out of range");
  }
  if (!std::is_sorted(d.edges.begin(), d.edges.end())) {
    out.notes.push_back(source + ": edges not in lexicographic order; sorted");
    sort_edges(d);
  }
  return out;
}

LoadResult load_drawing(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_drawing(buf.str(), path.string());
}

std::string serialize_drawing(const Drawing& d) {
  std::ostringstream os;
  os << "{\n\"format\": \"" << kFormat << "\",\n\"field\": \"" << kField << "\",\n\"vertices\": [";
  for (int i = 0; i < d.n(); ++i) {
    os << (i ? ",\n" : "\n") << "  [";
    write_coordinate(os, d.vertices[i].x);
    os << ", ";
    write_coordinate(os, d.vertices[i].y);
    os << "]";
  }
  os << (d.n() ? "\n" : "") << "],\n\"edges\": [";
  for (int i = 0; i < d.e(); ++i) {
    os << (i ? ",\n" : "\n") << "  [" << d.edges[i].u << ", " << d.edges[i].v << "]";
  }
  os << (d.e() ? "\n" : "") << "],\n\"meta\": {";
  bool first = true;
  for (const auto& [k, v] : d.meta) {
    os << (first ? "\n" : ",\n") << "  " << json(k).dump() << ": " << json(v).dump();
    first = false;
  }
  os << (first ? "" : "\n") << "}\n}\n";
  return os.str();
}

void save_drawing(const std::filesystem::path& path, const Drawing& d) {
  Drawing canonical = d;
  if (!std::is_sorted(canonical.edges.begin(), canonical.edges.end())) sort_edges(canonical);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << serialize_drawing(canonical);
  if (!out) throw Error("write failed: " + path.string());
}

}  // namespace udk
