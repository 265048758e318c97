#include "udk/report.h"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <sstream>
#include <thread>

#include <openssl/evp.h>

namespace udk {

namespace {

std::string str(const mpq_class& q) { return q.get_str(); }

class FieldScanner {
 public:
  explicit FieldScanner(const std::string& text) : s_(text) {}

  QField parse() {
    QField sum;
    skip_space();
    if (at_end()) fail("empty value");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++i_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      QField term = parse_term();
      sum += sign > 0 ? term : -term;
      first = false;
      skip_space();
    }
    return sum;
  }

 private:
  bool at_end() const { return i_ >= s_.size(); }
  char peek() const { return s_[i_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++i_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("\"" + s_ + "\" at offset " + std::to_string(i_), what);
  }
  bool accept(const std::string& word) {
    if (s_.compare(i_, word.size(), word) != 0) return false;
    i_ += word.size();
    return true;
  }
  mpz_class integer() {
    std::size_t start = i_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
    if (start == i_) fail("expected an integer");
    return mpz_class(s_.substr(start, i_ - start), 10);
  }
  mpz_class denominator() {
    mpz_class den = integer();
    if (den == 0) fail("zero denominator");
    return den;
  }

  // term := rational ["*" "sqrt3"] | "sqrt3" ["/" integer]
  QField parse_term() {
    if (accept("sqrt3")) {
      mpq_class b = 1;
      if (accept("/")) b = mpq_class(1, 1) / mpq_class(denominator());
      return QField(0, b);
    }
    mpq_class q(integer());
    if (accept("/")) q /= mpq_class(denominator());
    if (accept("*")) {
      if (!accept("sqrt3")) fail("expected sqrt3 after '*'");
      return QField(0, q);
    }
    return QField(q);
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

std::string read_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), "cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw ParseError(path.string(), "read error");
  return os.str();
}

std::string iso_timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

const char* mode_name(SplitMode m) { return m == SplitMode::exact ? "exact" : "greedy"; }

}  // namespace

QField parse_qfield(const std::string& text) { return FieldScanner(text).parse(); }

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256: digest computation failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

ordered_json to_json(const ValidationReport& r) {
  ordered_json j;
  j["valid"] = r.valid();
  j["malformed_edges"] = r.malformed_edges;
  j["non_unit_edges"] = r.non_unit_edges;
  j["coincident_vertices"] = r.coincident_vertices;
  j["duplicate_edges"] = r.duplicate_edges;
  j["vertex_in_edge"] = r.vertex_in_edge;
  j["overlapping_edges"] = r.overlapping_edges;
  return j;
}

ordered_json to_json(const CrossingReport& r, bool list_crossings) {
  ordered_json j;
  j["crossings"] = r.crossings.size();
  j["max_crossings_per_edge"] = r.max_crossings_per_edge;
  j["crossed_edges"] = std::count_if(r.per_edge.begin(), r.per_edge.end(), [](int c) { return c > 0; });
  if (list_crossings) {
    ordered_json list = ordered_json::array();
    for (const auto& c : r.crossings) {
      list.push_back({{"edges", {c.e1, c.e2}}, {"point", {c.point.x.to_string(), c.point.y.to_string()}}});
    }
    j["list"] = std::move(list);
  }
  return j;
}

ordered_json to_json(const DensityResult& r) {
  ordered_json j;
  j["t"] = str(r.t);
  j["edges"] = r.edges;
  j["rhs"] = str(r.rhs);
  j["slack"] = str(r.slack);
  j["holds"] = r.holds;
  return j;
}

ordered_json to_json(const SmallCellReport& r) {
  static const char* names[] = {"a", "b", "c", "d", "e", "f"};
  ordered_json hist;
  for (int i = 0; i < 6; ++i) hist[names[i]] = r.histogram[i];
  ordered_json j;
  j["small_cells"] = r.cells.size();
  j["histogram"] = std::move(hist);
  j["unclassifiable"] = r.unclassifiable.size();
  j["c5"] = r.c5;
  j["one_plane"] = r.one_plane;
  j["only_type_a"] = r.only_type_a;
  return j;
}

ordered_json to_json(const IncidenceAudit& r) {
  ordered_json j;
  j["crossings"] = r.crossings;
  j["c5"] = r.c5;
  j["x1"] = r.x1;
  j["x2"] = r.x2;
  j["overloaded"] = r.overloaded;
  ordered_json tri = ordered_json::array();
  for (const auto& t : r.triangles) tri.push_back({{"vertices", t.vertices}, {"crossing_node", t.crossing_node}});
  j["triangles"] = std::move(tri);
  j["sum_holds"] = r.sum_holds;
  j["triangles_unit"] = r.triangles_unit;
  j["disjoint"] = r.disjoint;
  j["count_holds"] = r.count_holds;
  j["claims_hold"] = r.claims_hold;
  return j;
}

ordered_json to_json(const OuterMetrics& r) {
  ordered_json j;
  j["perimeter"] = r.perimeter.to_string();
  j["perimeter_approx"] = r.perimeter.to_double();
  j["area"] = r.area.to_string();
  j["area_approx"] = r.area.to_double();
  j["isoperimetric"] = r.isoperimetric > 0 ? "holds" : (r.isoperimetric < 0 ? "fails" : "undecided");
  return j;
}

ordered_json to_json(const DischargingAudit& r, bool per_face) {
  ordered_json j;
  j["n"] = r.n;
  j["e"] = r.e;
  j["e0"] = r.e0;
  j["e1"] = r.e1;
  j["faces"] = r.faces.size();
  std::array<int, 4> types{};
  for (const auto& b : r.bad_triangles) ++types[b.type - 1];
  j["bad_triangles"] = {{"type1", types[0]}, {"type2", types[1]}, {"type3", types[2]}, {"type4", types[3]}};
  j["transfers"] = r.transfers.size();
  j["total_charge"] = r.total_charge;
  j["total_final"] = r.total_final;
  j["sum_size_minus_2"] = r.sum_size_minus_2;
  j["verdicts"] = {{"halfedge_bound", r.halfedge_bound},
                   {"charges_nonnegative", r.charges_nonnegative},
                   {"edge_bound", r.edge_bound}};
  j["violations"] = r.violations;
  j["passed"] = r.passed();
  if (per_face) {
    ordered_json faces = ordered_json::array();
    for (const auto& f : r.faces) {
      faces.push_back({{"size", f.size}, {"distinct", f.distinct}, {"m", f.m}, {"t", f.t}, {"h", f.h},
                       {"charge", f.charge}, {"final", f.final_charge}, {"bounded", f.bounded}});
    }
    j["face_records"] = std::move(faces);
    ordered_json transfers = ordered_json::array();
    for (const auto& t : r.transfers) transfers.push_back({{"to", t.to}, {"from", t.from}});
    j["transfer_list"] = std::move(transfers);
  }
  return j;
}

ordered_json to_json(const BoundTable& t) {
  ordered_json j;
  j["n"] = t.n;
  j["u0"] = t.u0;
  j["u0_printed"] = t.u0_printed;
  j["u1_upper"] = t.u1_upper;
  j["u2_upper"] = t.u2_upper;
  j["e1"] = t.e1;
  j["e2_upper"] = t.e2_upper;
  auto opt = [&](const char* key, const std::optional<std::int64_t>& v) {
    j[key] = v ? ordered_json(*v) : ordered_json(nullptr);
  };
  opt("spiral_floor", t.spiral_floor);
  opt("layer_floor", t.layer_floor);
  opt("spiral_edges", t.spiral_edges);
  opt("hexagon_edges", t.hexagon_edges);
  opt("margin", t.margin);
  return j;
}

DischargingRun run_discharging(const Drawing& d, AuditMode mode) {
  SplitOptions opt;
  opt.mode = mode == AuditMode::greedy ? SplitMode::greedy : SplitMode::exact;
  DischargingRun run;
  try {
    run.split = plane_subgraph(d, opt);
  } catch (const SizeLimitError&) {
    if (mode != AuditMode::automatic) throw;
    opt.mode = SplitMode::greedy;
    run.split = plane_subgraph(d, opt);
  }
  run.mode = opt.mode;
  run.audit = discharging_audit(d, run.split);
  return run;
}

ordered_json to_json(const DischargingRun& r, bool per_face) {
  ordered_json j;
  j["mode"] = mode_name(r.mode);
  j["flips"] = r.split.flips;
  j["readded"] = r.split.readded;
  ordered_json audit = to_json(r.audit, per_face);
  for (auto& [k, v] : audit.items()) j[k] = std::move(v);
  return j;
}

std::optional<ordered_json> formula_check(const Drawing& d) {
  auto tag = d.meta.find("construction");
  if (tag == d.meta.end()) return std::nullopt;
  auto meta_int = [&](const char* key) -> std::optional<std::int64_t> {
    auto it = d.meta.find(key);
    if (it == d.meta.end()) return std::nullopt;
    try {
      return std::stoll(it->second);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };
  const std::int64_t n = d.n(), e = d.e();
  ordered_json j;
  j["construction"] = tag->second;
  auto exact = [&](std::int64_t want_n, std::int64_t want_e) {
    j["expected_n"] = want_n;
    j["expected_e"] = want_e;
    j["holds"] = n == want_n && e == want_e;
  };
  const std::string& c = tag->second;
  if (c == "rook") {
    exact(9, 18);
  } else if (c == "dodecagon") {
    exact(29, 72);
  } else if (c == "grid") {
    auto k = meta_int("k");
    if (!k || *k < 1 || *k > 1000) return std::nullopt;
    exact(grid_vertices(static_cast<int>(*k)), grid_edges(static_cast<int>(*k)));
  } else if (c == "spiral") {
    if (n < 29) return std::nullopt;
    ConstructionParams p = params_for_vertices(n);
    bool holds = true;
    if (p.A == 0) {
      j["layer_floor"] = layer_floor(n);
      holds = holds && e == layer_floor(n);
    }
    if (n >= 179) {
      j["spiral_floor"] = spiral_floor(n);
      holds = holds && e >= spiral_floor(n);
    }
    j["u0"] = u0(n);
    j["margin"] = e - u0(n);
    j["holds"] = holds;
  } else if (c == "hexlattice") {
    j["u0"] = u0(n);
    j["holds"] = e == u0(n);
  } else if (c == "shifted") {
    // e >= 3.5n - 8 sqrt(n), decided as 2e - 7n >= -16 sqrt(n).
    std::int64_t lhs = 2 * e - 7 * n;
    j["placeholder_c"] = 8;
    j["holds"] = lhs >= 0 || lhs * lhs <= 256 * n;
  } else {
    return std::nullopt;
  }
  return j;
}

ordered_json analyze_file(const std::filesystem::path& path, const std::string& name) {
  ordered_json rec;
  rec["path"] = name;
  std::string bytes;
  try {
    bytes = read_bytes(path);
  } catch (const Error& e) {
    rec["sha256"] = nullptr;
    rec["status"] = "error";
    rec["error"] = e.what();
    rec["passed"] = false;
    return rec;
  }
  rec["sha256"] = sha256_hex(bytes);
  ordered_json verdicts = ordered_json::object();
  try {
    LoadResult loaded = parse_drawing(bytes, name);
    const Drawing& d = loaded.drawing;
    rec["n"] = d.n();
    rec["e"] = d.e();
    rec["notes"] = loaded.notes;
    ValidationReport vr = validate_drawing(d);
    rec["validation"] = to_json(vr);
    verdicts["valid"] = vr.valid();
    if (vr.valid()) {
      Planarization p = planarize(d);
      const CrossingReport& cr = p.crossings;
      rec["crossings"] = to_json(cr);
      rec["k_planarity"] = cr.max_crossings_per_edge;
      std::vector<Cell> cells = cell_decomposition(p);
      bool connected = is_connected(p);
      rec["connected"] = connected;
      if (connected) {
        ordered_json dens;
        for (int t : {2, 3, 4}) {
          DensityResult r = density_check(d, p, cells, t);
          dens["t" + std::to_string(t)] = to_json(r);
          verdicts["density_t" + std::to_string(t)] = r.holds;
        }
        rec["density"] = std::move(dens);
      }
      SmallCellReport sc = small_cell_classifier(p, cells);
      rec["small_cells"] = to_json(sc);
      if (sc.one_plane) {
        verdicts["small_cells"] = sc.only_type_a;
        IncidenceAudit ia = crossing_incidence_audit(d);
        rec["incidence_audit"] = to_json(ia);
        verdicts["incidence_audit"] = ia.claims_hold;
      }
      if (cr.is_k_plane(2) && d.n() >= 3) {
        DischargingRun run = run_discharging(d, AuditMode::automatic);
        rec["discharging"] = to_json(run);
        verdicts["discharging"] = run.audit.passed();
      }
      if (auto f = formula_check(d)) {
        verdicts["formulas"] = (*f)["holds"];
        rec["formulas"] = std::move(*f);
      }
    }
    rec["status"] = "ok";
  } catch (const std::exception& e) {
    rec["status"] = "error";
    rec["error"] = e.what();
  }
  bool passed = rec["status"] == "ok";
  for (const auto& [k, v] : verdicts.items()) passed = passed && v.get<bool>();
  rec["verdicts"] = std::move(verdicts);
  rec["passed"] = passed;
  return rec;
}

ordered_json batch(const std::filesystem::path& dir, const BatchOptions& opt) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().filename().string().front() != '.') files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<ordered_json> records(files.size());
  int threads = opt.threads > 0 ? opt.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, std::max<int>(1, static_cast<int>(files.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < files.size();) {
      records[i] = analyze_file(files[i], files[i].filename().string());
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  ordered_json report;
  report["format"] = "udk-batch-report/1";
  report["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  if (opt.timestamp) report["timestamp"] = iso_timestamp();
  ordered_json hashes = ordered_json::object();
  int passed = 0, errors = 0;
  for (const auto& r : records) {
    hashes[r["path"].get<std::string>()] = r["sha256"];
    if (r["passed"].get<bool>()) ++passed;
    if (r["status"] == "error") ++errors;
  }
  report["input_hashes"] = std::move(hashes);
  report["records"] = std::move(records);
  report["summary"] = {{"files", files.size()},
                       {"passed", passed},
                       {"failed", static_cast<int>(files.size()) - passed},
                       {"errors", errors}};
  return report;
}

bool batch_passed(const ordered_json& report) {
  const auto& s = report.at("summary");
  return s.at("failed").get<int>() == 0;
}

}  // namespace udk
