// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 when any
// criterion fails. Reference values are recomputed here independently of
// the library formulas.

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support/shapes.h"
#include "udk/arrangement.h"
#include "udk/constructions.h"
#include "udk/faces.h"
#include "udk/model.h"
#include "udk/report.h"

using namespace udk;
using namespace udk::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

struct Named {
  std::string name;
  Drawing d;
};

// floor(3n - sqrt(12n - 3)) by search: the largest m with 3n - m >= sqrt(12n - 3).
long reference_u0(long n) {
  long m = 3 * n;
  while (m >= 0 && (3 * n - m < 0 || (3 * n - m) * (3 * n - m) < 12 * n - 3)) --m;
  return m;
}

// floor(sqrt(x)) by search.
long reference_isqrt(long x) {
  long r = 0;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

// e >= floor(3n - sqrt(192n/23 - 23088/529) - 13683/23). With integer e this
// is e > X - 1, i.e. 69n - 13660 - 23e < sqrt(4416n - 23088).
bool reference_spiral_bound(long n, long e) {
  long lhs = 69 * n - 13660 - 23 * e;
  return lhs < 0 || lhs * lhs < 4416 * n - 23088;
}

struct Corpus {
  std::vector<Named> generated;  // constructions
  std::vector<Named> random2;    // random drawings with at most two crossings per edge
  std::vector<Named> random1;    // random 1-plane drawings
  std::vector<Named> small;      // hand-built drawings

  std::vector<const Named*> all() const {
    std::vector<const Named*> out;
    for (const auto* part : {&generated, &random2, &random1, &small}) {
      for (const auto& x : *part) out.push_back(&x);
    }
    return out;
  }
};

Corpus build_corpus() {
  Corpus c;
  c.generated.push_back({"rook", rook_block()});
  c.generated.push_back({"rook_3_4_5", rook_block(QField::ratio(3, 5), QField::ratio(4, 5))});
  c.generated.push_back({"dodecagon", dodecagon()});
  for (int k = 1; k <= 4; ++k) c.generated.push_back({"grid_" + std::to_string(k), dodecagon_grid(k)});
  for (long n : {29L, 100L, 179L, 250L, 400L, 600L, 893L, 1000L, 1300L}) {
    c.generated.push_back({"spiral_" + std::to_string(n), spiral_construction(n)});
  }
  for (int n : {3, 7, 19, 50, 120, 200}) c.generated.push_back({"hexlattice_" + std::to_string(n), triangular_hexagon(n)});
  for (int n : {6, 40, 100}) c.generated.push_back({"shifted_" + std::to_string(n), shifted_lattice(n)});

  CorpusOptions two;
  two.pendants = 10;
  auto random2 = random_corpus(20241, 110, two);
  for (std::size_t i = 0; i < random2.size(); ++i) c.random2.push_back({"random2_" + std::to_string(i), random2[i]});
  CorpusOptions large;
  large.min_vertices = 60;
  large.max_vertices = 150;
  large.radius = 6;
  large.pendants = 40;
  auto random2_large = random_corpus(4099, 30, large);
  for (std::size_t i = 0; i < random2_large.size(); ++i) {
    c.random2.push_back({"random2_large_" + std::to_string(i), random2_large[i]});
  }
  CorpusOptions one;
  one.max_crossings = 1;
  one.pendants = 10;
  auto random1 = random_corpus(777, 50, one);
  for (std::size_t i = 0; i < random1.size(); ++i) c.random1.push_back({"random1_" + std::to_string(i), random1[i]});

  c.small = {{"single_edge", single_edge()},   {"unit_triangle", unit_triangle()}, {"unit_x", unit_x()},
             {"rhombus_gadget", rhombus_gadget()}, {"type4_gadget", type4_gadget()},
             {"type1_gadget", type1_gadget()}};
  return c;
}

Outcome criterion_counts() {
  Outcome o;
  auto timed = [&](const std::string& name, const std::function<Drawing()>& make, long n, long e) {
    auto t0 = Clock::now();
    Drawing d = make();
    double s = seconds_since(t0);
    o.require(d.n() == n && d.e() == e, name + ": got (" + std::to_string(d.n()) + ", " + std::to_string(d.e()) +
                                            "), expected (" + std::to_string(n) + ", " + std::to_string(e) + ")");
    o.require(s < 1.0, name + ": took " + std::to_string(s) + " s");
  };
  timed("rook", [] { return rook_block(); }, 9, 18);
  timed("dodecagon", [] { return dodecagon(); }, 29, 72);
  for (long k = 1; k <= 6; ++k) {
    timed("grid k=" + std::to_string(k), [k] { return dodecagon_grid(static_cast<int>(k)); },
          69 * k * k - 57 * k + 17, 207 * k * k - 195 * k + 60);
  }
  if (o.pass) o.detail = "rook (9, 18), dodecagon (29, 72), grid k=1..6 match; k=6 gives (2159, 6342)";
  return o;
}

Outcome criterion_two_plane(const Corpus& c) {
  Outcome o;
  auto t0 = Clock::now();
  int checked = 0;
  long crossings = 0;
  for (const auto& x : c.generated) {
    const std::string& tag = x.d.meta.at("construction");
    if (tag != "rook" && tag != "dodecagon" && tag != "grid" && tag != "spiral") continue;
    CrossingReport fast = crossing_report(x.d);
    CrossingReport slow = oracle_crossings(x.d);
    o.require(fast == slow, x.name + ": grid filter and oracle disagree");
    o.require(fast.max_crossings_per_edge <= 2,
              x.name + ": " + std::to_string(fast.max_crossings_per_edge) + " crossings on one edge");
    ++checked;
    crossings += static_cast<long>(fast.crossings.size());
  }
  double s = seconds_since(t0);
  o.require(s < 30.0, "took " + std::to_string(s) + " s");
  if (o.pass) {
    o.detail = std::to_string(checked) + " drawings, " + std::to_string(crossings) +
               " crossings, identical crossing sets, max 2 per edge";
  }
  return o;
}

Outcome criterion_spiral_bound() {
  Outcome o;
  long min_slack = -1, min_n = 0;
  for (int i = 0; i < 40; ++i) {
    long n = 179 + (i * (5000L - 179)) / 39;
    Drawing d = spiral_construction(n);
    o.require(d.n() == n, "spiral n=" + std::to_string(n) + " has " + std::to_string(d.n()) + " vertices");
    o.require(validate_drawing(d).valid(), "spiral n=" + std::to_string(n) + " is not valid");
    o.require(reference_spiral_bound(n, d.e()), "spiral n=" + std::to_string(n) + " has only " +
                                                    std::to_string(d.e()) + " edges");
    long slack = d.e() - spiral_floor(n);
    if (min_slack < 0 || slack < min_slack) min_slack = slack, min_n = n;
  }
  for (long k = 1; k <= 6; ++k) {
    long n = 69 * k * k - 57 * k + 17;
    long e = spiral_construction(n).e();
    long margin = e - reference_u0(n);
    long printed_margin = e - (3 * n - reference_isqrt(12 * n - 3));
    o.require(margin > 0, "k=" + std::to_string(k) + ": e - u0 = " + std::to_string(margin));
    o.require(printed_margin == reference_isqrt(12 * n - 3) - (24 * k - 9),
              "k=" + std::to_string(k) + ": margin " + std::to_string(printed_margin) + " differs from the closed form");
  }
  if (o.pass) {
    o.detail = "40 samples above the floor (least slack " + std::to_string(min_slack) + " at n=" +
               std::to_string(min_n) + "); layer margins k=1..6 positive and equal to the closed form";
  }
  return o;
}

Outcome criterion_discharging(const Corpus& c) {
  Outcome o;
  auto t0 = Clock::now();
  int generated = 0, random = 0, transfers = 0, bad = 0, flips = 0;
  auto audit = [&](const Named& x) {
    DischargingRun run = run_discharging(x.d, AuditMode::automatic);
    const DischargingAudit& a = run.audit;
    flips += run.split.flips;
    std::string why = a.violations.empty() ? "" : ": " + a.violations.front();
    o.require(a.halfedge_bound, x.name + ": halfedge bound fails" + why);
    o.require(a.charges_nonnegative, x.name + ": negative final charge" + why);
    o.require(a.edge_bound, x.name + ": edge bound fails" + why);
    o.require(a.violations.empty(), x.name + why);
    o.require(a.e <= 4 * a.n - 8 || a.n < 3, x.name + ": e > 4n - 8");
    transfers += static_cast<int>(a.transfers.size());
    bad += static_cast<int>(a.bad_triangles.size());
  };
  for (const auto& x : c.generated) {
    if (!crossing_report(x.d).is_k_plane(2)) continue;
    audit(x);
    ++generated;
  }
  for (const auto* part : {&c.random2, &c.random1, &c.small}) {
    for (const auto& x : *part) {
      if (x.d.n() < 3) continue;
      audit(x);
      ++random;
    }
  }
  o.require(static_cast<int>(c.random2.size()) >= 100, "random 2-plane corpus has fewer than 100 drawings");
  double s = seconds_since(t0);
  o.require(s < 60.0, "took " + std::to_string(s) + " s");
  if (o.pass) {
    o.detail = std::to_string(generated) + " generated + " + std::to_string(random) + " random/hand-built drawings, " +
               std::to_string(flips) + " flips, " + std::to_string(bad) + " type-4 triangles, " +
               std::to_string(transfers) + " transfers";
  }
  return o;
}

Outcome criterion_density(const Corpus& c) {
  Outcome o;
  int connected = 0;
  for (const Named* x : c.all()) {
    Planarization p = planarize(x->d);
    if (!is_connected(p)) continue;
    ++connected;
    std::vector<Cell> cells = cell_decomposition(p);
    for (int t : {2, 3, 4}) {
      DensityResult r = density_check(x->d, p, cells, t);
      o.require(r.holds, x->name + ": density fails at t=" + std::to_string(t) + " (rhs " + r.rhs.get_str() + ")");
    }
  }
  // Unit X: one cell of size 4 * 2 + 4 = 12 and one crossing, at t = 3.
  mpq_class t = 3;
  mpq_class expected = t * (4 - 2) - ((t - 1) / 4 * 12 - t) - 1;
  DensityResult x = density_check(unit_x(), t);
  o.require(expected == 2 && x.rhs == expected && x.holds, "unit X: rhs " + x.rhs.get_str() + ", expected 2");
  if (o.pass) o.detail = std::to_string(connected) + " connected drawings hold for t=2,3,4; unit X rhs = 2";
  return o;
}

Outcome criterion_small_cells(const Corpus& c) {
  Outcome o;
  int one_plane = 0, unclassified = 0;
  for (const Named* x : c.all()) {
    if (!crossing_report(x->d).is_k_plane(1)) continue;
    ++one_plane;
    SmallCellReport r = small_cell_classifier(x->d);
    int others = r.histogram[1] + r.histogram[2] + r.histogram[3] + r.histogram[4] + r.histogram[5];
    o.require(others == 0 && r.only_type_a, x->name + ": " + std::to_string(others) + " small cells of types b-f");
    unclassified += static_cast<int>(r.unclassifiable.size());
  }
  // Gadget: unit triangle u1 v1 u2 with the edge u2 v2 crossing u1 v1.
  Drawing g = rhombus_gadget();
  Planarization p = planarize(g);
  std::vector<Cell> cells = cell_decomposition(p);
  std::vector<const Cell*> five;
  for (const auto& cell : cells) {
    if (cell.size == 5) five.push_back(&cell);
  }
  o.require(five.size() == 2, "gadget: " + std::to_string(five.size()) + " cells of size 5");
  if (five.size() == 2) {
    o.require(five[0]->crossings.size() == 1 && five[0]->crossings == five[1]->crossings,
              "gadget: size-5 cells do not share exactly one crossing");
  }
  IncidenceAudit a = crossing_incidence_audit(g);
  o.require(a.x2 == 1 && a.triangles.size() == 1, "gadget: x2 = " + std::to_string(a.x2));
  if (a.triangles.size() == 1) {
    std::set<int> tri(a.triangles[0].vertices.begin(), a.triangles[0].vertices.end());
    o.require(tri == std::set<int>{0, 1, 2}, "gadget: wrong triangle extracted");
  }
  o.require(a.claims_hold, "gadget: incidence claims fail");
  if (o.pass) {
    o.detail = std::to_string(one_plane) + " 1-plane drawings without types b-f (" + std::to_string(unclassified) +
               " small cells outside the taxonomy); gadget x2 = 1";
  }
  return o;
}

Outcome criterion_matchstick(const Corpus& c) {
  Outcome o;
  int count = 0;
  long removed = 0;
  for (const Named* x : c.all()) {
    long crossings = static_cast<long>(oracle_crossings(x->d).crossings.size());
    Drawing r = matchstick_reduction(x->d);
    o.require(oracle_crossings(r).crossings.empty(), x->name + ": crossings remain");
    o.require(r.e() >= x->d.e() - crossings, x->name + ": removed more edges than crossings");
    o.require(r.n() == x->d.n(), x->name + ": vertices changed");
    ++count;
    removed += x->d.e() - r.e();
  }
  if (o.pass) o.detail = std::to_string(count) + " drawings crossing-free after removing " + std::to_string(removed) + " edges";
  return o;
}

Outcome criterion_u0() {
  Outcome o;
  const long expected[] = {3, 5, 7, 9, 12};
  for (long n = 3; n <= 7; ++n) {
    o.require(u0(n) == expected[n - 3] && reference_u0(n) == expected[n - 3],
              "u0(" + std::to_string(n) + ") = " + std::to_string(u0(n)));
  }
  for (int n = 3; n <= 200; ++n) {
    Drawing d = triangular_hexagon(n);
    o.require(d.n() == n && d.e() == reference_u0(n), "hexagon n=" + std::to_string(n) + " has " +
                                                          std::to_string(d.e()) + " edges, u0 is " +
                                                          std::to_string(reference_u0(n)));
  }
  if (o.pass) o.detail = "u0(3..7) = 3, 5, 7, 9, 12; triangular hexagon attains u0 for n = 3..200";
  return o;
}

Outcome criterion_roundtrip(const Corpus& c) {
  Outcome o;
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / ("udk_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  int files = 0;
  for (const Named* x : c.all()) {
    fs::path path = dir / (x->name + ".udg");
    save_drawing(path, x->d);
    std::ifstream in(path, std::ios::binary);
    std::stringstream bytes;
    bytes << in.rdbuf();
    LoadResult back = load_drawing(path);
    Drawing canonical = x->d;
    sort_edges(canonical);
    o.require(back.drawing == canonical, x->name + ": loaded drawing differs");
    o.require(back.notes.empty(), x->name + ": canonical file produced load notes");
    o.require(serialize_drawing(back.drawing) == bytes.str(), x->name + ": re-serialized bytes differ");
    ++files;
  }
  BatchOptions single;
  single.threads = 1;
  single.timestamp = false;
  BatchOptions parallel;
  parallel.threads = 4;
  parallel.timestamp = false;
  ordered_json first = batch(dir, single);
  ordered_json second = batch(dir, parallel);
  for (std::size_t i = 0; i < first["records"].size(); ++i) {
    const auto& a = first["records"][i];
    o.require(a == second["records"][i], "batch reports differ between runs at " + a["path"].get<std::string>());
  }
  o.require(first.dump(2) == second.dump(2), "batch reports differ between runs");
  ordered_json stamped = batch(dir);
  stamped.erase("timestamp");
  o.require(stamped.dump(2) == first.dump(2), "batch report differs beyond the timestamp");
  for (const auto& r : first["records"]) {
    o.require(r["passed"].get<bool>(), r["path"].get<std::string>() + " fails the batch pipeline: " + r.dump());
  }
  fs::remove_all(dir);
  if (o.pass) {
    o.detail = std::to_string(files) + " files round-trip bit-exact; three batch runs identical, all files pass";
  }
  return o;
}

}  // namespace

int main() {
  std::setvbuf(stdout, nullptr, _IOLBF, 0);
  int failures = 0;
  auto run = [&](int id, const char* title, const std::function<Outcome()>& fn) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), seconds_since(t0));
  };

  auto t0 = Clock::now();
  Corpus corpus = build_corpus();
  std::printf("corpus: %zu drawings built in %.2f s\n", corpus.all().size(), seconds_since(t0));

  run(1, "construction counts", criterion_counts);
  run(2, "2-planarity, grid filter vs oracle", [&] { return criterion_two_plane(corpus); });
  run(3, "spiral lower bound", criterion_spiral_bound);
  run(4, "discharging audit", [&] { return criterion_discharging(corpus); });
  run(5, "density formula", [&] { return criterion_density(corpus); });
  run(6, "small-cell taxonomy", [&] { return criterion_small_cells(corpus); });
  run(7, "matchstick reduction", [&] { return criterion_matchstick(corpus); });
  run(8, "u0 evaluator", criterion_u0);
  run(9, "round-trip and determinism", [&] { return criterion_roundtrip(corpus); });
  std::printf("%s: %d of 9 criteria failed\n", failures ? "FAILED" : "PASSED", failures);
  return failures ? 1 : 0;
}
