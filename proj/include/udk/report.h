#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "udk/arrangement.h"
#include "udk/constructions.h"
#include "udk/faces.h"
#include "udk/model.h"

namespace udk {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "udk";
inline constexpr const char* kToolVersion = "1.0.0";

/// Parses "p/q", "p/q*sqrt3", "sqrt3/q" and sums of such terms, e.g.
/// "1/2+3/4*sqrt3". Throws ParseError on anything else.
QField parse_qfield(const std::string& text);

/// Lowercase hex SHA-256 digest.
std::string sha256_hex(const std::string& bytes);

// JSON views of the audit results. Exact values are written as strings.

ordered_json to_json(const ValidationReport& r);
ordered_json to_json(const CrossingReport& r, bool list_crossings = false);
ordered_json to_json(const DensityResult& r);
ordered_json to_json(const SmallCellReport& r);
ordered_json to_json(const IncidenceAudit& r);
ordered_json to_json(const OuterMetrics& r);
ordered_json to_json(const DischargingAudit& r, bool per_face = false);
ordered_json to_json(const BoundTable& t);

enum class AuditMode { exact, greedy, automatic };

struct DischargingRun {
  PlaneSplit split;
  SplitMode mode = SplitMode::exact;  // the search that produced the split
  DischargingAudit audit;
};

/// Discharging audit on a split from plane_subgraph. `automatic` runs the
/// exact search and falls back to greedy on SizeLimitError.
DischargingRun run_discharging(const Drawing& d, AuditMode mode);

/// Audit JSON together with the split mode, flips and re-added edges.
ordered_json to_json(const DischargingRun& r, bool per_face = false);

/// Counts of a generated drawing compared with the closed formulas, chosen
/// by meta["construction"]. Empty when the drawing carries no known tag.
std::optional<ordered_json> formula_check(const Drawing& d);

/// The per-file pipeline of `batch`: validation, crossings, density for
/// t = 2, 3, 4 (connected drawings), small cells, the incidence audit
/// (1-plane) and the discharging audit (2-plane, n >= 3). Module errors end the
/// pipeline and are stored verbatim under "error".
ordered_json analyze_file(const std::filesystem::path& path, const std::string& name);

struct BatchOptions {
  int threads = 0;  // 0: hardware concurrency
  bool timestamp = true;
};

/// Runs analyze_file on every regular file of `dir`, ordered by path.
/// Throws std::filesystem::filesystem_error when `dir` cannot be listed.
ordered_json batch(const std::filesystem::path& dir, const BatchOptions& opt = {});

/// True when every record of a batch report passed.
bool batch_passed(const ordered_json& report);

}  // namespace udk
