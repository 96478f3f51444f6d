#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fpcc/grid.hpp"
#include "fpcc/metrics.hpp"
#include "fpcc/timeloop.hpp"

namespace fpcc {

/// The record tables compare against: the space-time norms for time
/// dependent runs, the final-time norms otherwise.
std::optional<ErrorRecord> table_errors(const RunReport& report);

nlohmann::json to_json(const ErrorRecord& record);
ErrorRecord error_record_from_json(const nlohmann::json& j);

/// Keys follow the RunReport field names. wall_time is the only field that
/// differs between two runs of the same configuration.
nlohmann::json to_json(const RunReport& report);

/// One line: problem, scheme, N, steps, paper norms, max TG cycles, seconds.
std::string summary_line(const RunReport& report);

/// Two whitespace-separated columns "x u", one row per cell center.
void write_snapshot(const std::filesystem::path& path, const StaggeredGrid& grid,
                    const Snapshot& snapshot);
std::string snapshot_filename(double t);

struct ConvergenceRow {
    std::size_t n_cells = 0;
    std::size_t n_steps = 0;
    double l1_paper = 0.0;
    double l2_paper = 0.0;
    /// Order from the previous row's l2_paper; empty for the first row.
    std::optional<double> order_est;
    int tg_cycles_max = 0;
    double wall_seconds = 0.0;
};

inline constexpr const char* kConvergenceHeader =
    "n_cells,n_steps,l1_paper,l2_paper,order_est,tg_cycles_max,wall_seconds";

/// Throws Error{invalid_argument} for a run without error norms.
std::vector<ConvergenceRow> convergence_rows(const std::vector<RunReport>& runs,
                                             double refinement_factor = 3.0);
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);
/// Inverse of convergence_csv. Throws Error{invalid_argument}.
std::vector<ConvergenceRow> parse_convergence_csv(const std::string& text);

/// Throws Error{io_failure} when the file cannot be written.
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace fpcc
