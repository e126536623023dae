#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "bfppc/audit.hpp"
#include "bfppc/engine.hpp"
#include "bfppc/regulator.hpp"

namespace bfppc {

// Writes the trace as RFC-4180 style CSV: header row, comma separator,
// decimal numbers at 12 significant digits.  Columns:
//   t, x1..xn, qx1..qxn, e1..en, eq1..eqn, alpha1..alpha(n-1), u, sigma,
//   rho, env_lo, env_hi
void write_trace_csv(const SimTrace& trace, const std::filesystem::path& path);

// Loads the column data back; n is inferred from the header.  Metadata that
// is not part of the CSV layout (radii, scenario name) stays default.
SimTrace load_trace_csv(const std::filesystem::path& path);

nlohmann::json report_json(const SimTrace& trace, const TraceStats& stats,
                           const FeasibilityReport& feasibility,
                           std::span<const AuditReport> audits, bool pass);

// Structural validation against the shape documented in
// docs/report.schema.json.
bool validate_report(const nlohmann::json& report, std::string* why = nullptr);

struct PlotSeries {
  std::string label;
  const Vec* x = nullptr;
  const Vec* y = nullptr;
  bool dashed = false;
  std::string color = "#1f77b4";
};

// Self-contained SVG line plot with auto-scaled axes.  Long series are
// thinned to keep files small.
void write_svg_plot(const std::filesystem::path& path, const std::string& title,
                    std::span<const PlotSeries> series);

// Emits the standard figure set for a run into dir.
std::vector<std::filesystem::path> write_run_figures(
    const SimTrace& trace, const std::filesystem::path& dir);

}  // namespace bfppc
