#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "udk/report.h"

namespace {

using udk::ordered_json;

/// Usage or IO problem: exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write " + path);
}

udk::Drawing load(const std::string& path) {
  if (!std::filesystem::is_regular_file(path)) throw UsageError(path + ": no such file");
  auto loaded = udk::load_drawing(path);
  for (const auto& note : loaded.notes) std::cerr << "note: " << note << "\n";
  return std::move(loaded.drawing);
}

/// Prints the validation failures and returns false for an invalid drawing.
bool check_valid(const udk::Drawing& d, const std::string& path) {
  udk::ValidationReport vr = udk::validate_drawing(d);
  if (vr.valid()) return true;
  std::cerr << path << ": invalid drawing\n" << vr.summary();
  return false;
}

struct Options {
  // generate
  std::string construction;
  int k = 1;
  std::int64_t n = 0;
  std::string theta_cos = "1/2*sqrt3", theta_sin = "1/2";
  std::string shift_x = "3/5", shift_y = "4/5";
  // shared
  std::string input, out;
  // analyze
  std::vector<std::string> density_t;
  bool cells = false, small_cells = false, incidence = false, outer = false, list_crossings = false;
  // audit
  std::string mode = "auto";
  bool per_face = false;
  // bounds
  bool json = false;
  std::int64_t limit = 20000;
  // render
  double scale = 50;
  // batch
  std::string dir, report;
  int threads = 0;
  bool no_timestamp = false;
  // verify
  bool oracle = false;
};

int cmd_generate(const Options& o) {
  udk::Drawing d;
  const std::string& c = o.construction;
  if (c == "rook") {
    d = udk::rook_block(udk::parse_qfield(o.theta_cos), udk::parse_qfield(o.theta_sin));
  } else if (c == "dodecagon") {
    d = udk::dodecagon();
  } else if (c == "grid") {
    if (o.k < 1) throw UsageError("grid needs --k >= 1");
    d = udk::dodecagon_grid(o.k);
  } else if (c == "spiral") {
    if (o.n < 29) throw UsageError("spiral needs --n >= 29");
    d = udk::spiral_construction(o.n);
  } else if (c == "hexlattice") {
    if (o.n < 1) throw UsageError("hexlattice needs --n >= 1");
    d = udk::triangular_hexagon(static_cast<int>(o.n));
  } else {
    if (o.n < 2) throw UsageError("shifted needs --n >= 2");
    d = udk::shifted_lattice(static_cast<int>(o.n), {udk::parse_qfield(o.shift_x), udk::parse_qfield(o.shift_y)});
  }
  write_output(o.out, udk::serialize_drawing(d));
  std::cerr << c << ": n=" << d.n() << " e=" << d.e() << "\n";
  return 0;
}

int cmd_verify(const Options& o) {
  udk::Drawing d = load(o.input);
  if (!check_valid(d, o.input)) return 1;
  udk::CrossingReport r = udk::crossing_report(d);
  bool ok = r.is_k_plane(o.k);
  std::cout << o.input << ": n=" << d.n() << " e=" << d.e() << " crossings=" << r.crossings.size()
            << " max_per_edge=" << r.max_crossings_per_edge << "\n";
  if (o.oracle) {
    bool same = udk::oracle_crossings(d) == r;
    std::cout << "oracle: " << (same ? "identical" : "DIFFERENT") << "\n";
    ok = ok && same;
  }
  std::cout << o.k << "-plane: " << (r.is_k_plane(o.k) ? "yes" : "no") << "\n";
  return ok ? 0 : 1;
}

int cmd_analyze(const Options& o) {
  udk::Drawing d = load(o.input);
  ordered_json j;
  j["path"] = o.input;
  j["n"] = d.n();
  j["e"] = d.e();
  udk::ValidationReport vr = udk::validate_drawing(d);
  j["validation"] = udk::to_json(vr);
  bool ok = vr.valid();
  if (ok) {
    udk::Planarization p = udk::planarize(d);
    j["crossings"] = udk::to_json(p.crossings, o.list_crossings);
    std::vector<udk::Cell> cells = udk::cell_decomposition(p);
    j["connected"] = udk::is_connected(p);
    if (!o.density_t.empty()) {
      ordered_json dens = ordered_json::array();
      for (const auto& text : o.density_t) {
        mpq_class t;
        try {
          t = mpq_class(text, 10);
          t.canonicalize();
        } catch (const std::invalid_argument&) {
          throw UsageError("--density-t: not a rational number: " + text);
        }
        if (t < 1) throw UsageError("--density-t: t must be at least 1");
        udk::DensityResult r = udk::density_check(d, p, cells, t);
        dens.push_back(udk::to_json(r));
        ok = ok && r.holds;
      }
      j["density"] = std::move(dens);
    }
    if (o.cells) {
      std::map<int, int> hist;
      ordered_json list = ordered_json::array();
      for (const auto& c : cells) {
        ++hist[c.size];
        list.push_back({{"size", c.size},
                        {"segments", c.segment_incidences},
                        {"vertices", c.vertex_incidences},
                        {"crossings", c.crossings.size()},
                        {"bounded", c.bounded}});
      }
      ordered_json h = ordered_json::object();
      for (auto [size, count] : hist) h[std::to_string(size)] = count;
      j["cells"] = {{"count", cells.size()}, {"size_histogram", h}, {"list", list}};
    }
    if (o.small_cells) {
      udk::SmallCellReport sc = udk::small_cell_classifier(p, cells);
      j["small_cells"] = udk::to_json(sc);
      ok = ok && (!sc.one_plane || sc.only_type_a);
    }
    if (o.incidence) {
      udk::IncidenceAudit ia = udk::crossing_incidence_audit(d);
      j["incidence_audit"] = udk::to_json(ia);
      ok = ok && ia.claims_hold;
    }
    if (o.outer) {
      udk::OuterMetrics m = udk::outer_metrics(d);
      j["outer_metrics"] = udk::to_json(m);
      ok = ok && m.isoperimetric_holds();
    }
  }
  j["passed"] = ok;
  write_output(o.out, j.dump(2) + "\n");
  return ok ? 0 : 1;
}

int cmd_audit(const Options& o) {
  udk::Drawing d = load(o.input);
  if (!check_valid(d, o.input)) return 1;
  udk::AuditMode mode = o.mode == "exact"    ? udk::AuditMode::exact
                        : o.mode == "greedy" ? udk::AuditMode::greedy
                                             : udk::AuditMode::automatic;
  udk::DischargingRun run = udk::run_discharging(d, mode);
  write_output(o.out, udk::to_json(run, o.per_face).dump(2) + "\n");
  return run.audit.passed() ? 0 : 1;
}

int cmd_bounds(const Options& o) {
  if (o.n < 3) throw UsageError("bounds needs --n >= 3");
  udk::BoundTable t = udk::bound_table(o.n, o.limit);
  if (o.json) {
    write_output(o.out, udk::to_json(t).dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  auto row = [&](const std::string& name, const std::string& value) {
    os << std::left << std::setw(44) << name << value << "\n";
  };
  auto opt = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
  row("n", std::to_string(t.n));
  row("u0 lower, floor(3n - sqrt(12n-3))", std::to_string(t.u0));
  row("u0 variant, 3n - floor(sqrt(12n-3))", std::to_string(t.u0_printed));
  row("u1 upper, 3n - sqrt(n)/100", std::to_string(t.u1_upper));
  row("u2 upper, 4n - 8", std::to_string(t.u2_upper));
  row("1-plane edge bound, 4n - 8", std::to_string(t.e1));
  row("2-plane edge bound, 5n - 10", std::to_string(t.e2_upper));
  row("layer formula floor", opt(t.layer_floor));
  row("spiral lower floor (n >= 179)", opt(t.spiral_floor));
  row("spiral construction edges", opt(t.spiral_edges));
  row("triangular hexagon edges", opt(t.hexagon_edges));
  row("margin, spiral edges - u0", opt(t.margin));
  write_output(o.out, os.str());
  return 0;
}

int cmd_render(const Options& o) {
  udk::Drawing d = load(o.input);
  if (!check_valid(d, o.input)) return 1;
  if (!(o.scale > 0)) throw UsageError("--scale must be positive");
  write_output(o.out, udk::render_svg(d, o.scale));
  return 0;
}

int cmd_batch(const Options& o) {
  if (!std::filesystem::is_directory(o.dir)) throw UsageError(o.dir + ": not a directory");
  udk::BatchOptions opt;
  opt.threads = o.threads;
  opt.timestamp = !o.no_timestamp;
  ordered_json report = udk::batch(o.dir, opt);
  write_output(o.report, report.dump(2) + "\n");
  const auto& s = report["summary"];
  std::cerr << "files=" << s["files"] << " passed=" << s["passed"] << " failed=" << s["failed"] << "\n";
  return udk::batch_passed(report) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact unit-distance drawings: generation and verification"};
  app.set_version_flag("--version", std::string(udk::kToolVersion));
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("generate", "Write a construction as a udg-drawing/1 file");
  gen->add_option("--construction", o.construction, "Construction name")
      ->required()
      ->check(CLI::IsMember({"rook", "dodecagon", "grid", "spiral", "hexlattice", "shifted"}));
  gen->add_option("--k", o.k, "Completed layers of the grid");
  gen->add_option("--n", o.n, "Vertex count for spiral, hexlattice and shifted");
  gen->add_option("--theta-cos", o.theta_cos, "Rook rotation cosine, e.g. 1/2*sqrt3");
  gen->add_option("--theta-sin", o.theta_sin, "Rook rotation sine, e.g. 1/2");
  gen->add_option("--shift-x", o.shift_x, "Shifted lattice translation, x");
  gen->add_option("--shift-y", o.shift_y, "Shifted lattice translation, y");
  gen->add_option("--out", o.out, "Output file (stdout when omitted)");

  auto* verify = app.add_subcommand("verify", "Check validity and k-planarity");
  verify->add_option("file", o.input)->required();
  verify->add_option("--k", o.k, "Allowed crossings per edge")->required();
  verify->add_flag("--oracle", o.oracle, "Also compare with the all-pairs crossing oracle");

  auto* analyze = app.add_subcommand("analyze", "Crossings, cells, density and incidence audits");
  analyze->add_option("file", o.input)->required();
  analyze->add_option("--density-t", o.density_t, "Density formula parameter (repeatable)");
  analyze->add_flag("--cells", o.cells, "List the cells of the planarization");
  analyze->add_flag("--small-cells", o.small_cells, "Classify cells of size at most five");
  analyze->add_flag("--incidence-audit", o.incidence, "Size-5 cell incidence audit (1-plane)");
  analyze->add_flag("--outer-metrics", o.outer, "Outer face perimeter, area and isoperimetric check");
  analyze->add_flag("--list-crossings", o.list_crossings, "Include every crossing point");
  analyze->add_option("--out", o.out, "Output file (stdout when omitted)");

  auto* audit = app.add_subcommand("audit", "Discharging audit of a 2-plane drawing");
  audit->add_option("file", o.input)->required();
  audit->add_option("--mode", o.mode, "Plane subgraph search")
      ->check(CLI::IsMember({"exact", "greedy", "auto"}));
  audit->add_flag("--per-face", o.per_face, "Include per-face charge records and transfers");
  audit->add_option("--out", o.out, "Output file (stdout when omitted)");

  auto* bounds = app.add_subcommand("bounds", "Bound formulas and construction counts for n");
  bounds->add_option("--n", o.n, "Vertex count")->required();
  bounds->add_option("--construction-limit", o.limit, "Largest n for which constructions are built");
  bounds->add_flag("--json", o.json, "JSON output");
  bounds->add_option("--out", o.out, "Output file (stdout when omitted)");

  auto* render = app.add_subcommand("render", "Render a drawing as SVG");
  render->add_option("file", o.input)->required();
  render->add_option("--out", o.out, "Output file (stdout when omitted)");
  render->add_option("--scale", o.scale, "Pixels per unit length");

  auto* batch = app.add_subcommand("batch", "Audit every drawing of a directory");
  batch->add_option("--dir", o.dir, "Input directory")->required();
  batch->add_option("--report", o.report, "Report file (stdout when omitted)");
  batch->add_option("--threads", o.threads, "Worker threads (0: all cores)");
  batch->add_flag("--no-timestamp", o.no_timestamp, "Omit the timestamp field");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*gen) return cmd_generate(o);
    if (*verify) return cmd_verify(o);
    if (*analyze) return cmd_analyze(o);
    if (*audit) return cmd_audit(o);
    if (*bounds) return cmd_bounds(o);
    if (*render) return cmd_render(o);
    if (*batch) return cmd_batch(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const udk::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const udk::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
