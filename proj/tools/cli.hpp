#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fpcc/error.hpp"
#include "fpcc/problems.hpp"
#include "fpcc/timeloop.hpp"

namespace fpcc::cli {

/// Values that may come from a config file or from flags. Unset fields fall
/// through to the next source: flags, then config file, then presets.
struct Overrides {
    std::optional<std::string> problem;
    std::optional<std::size_t> cells;
    std::optional<std::string> scheme;
    std::optional<double> tau;
    std::optional<std::string> tau_law;
    std::optional<double> t_final;
    std::optional<int> m1;
    std::optional<int> m2;
    std::optional<double> tol;
    std::optional<int> max_cycles;
    std::optional<std::string> normalize;  ///< on | off | auto
    std::optional<std::string> smoother;
    std::optional<std::string> solver;     ///< two-level | direct
    std::optional<std::string> stopping;   ///< norm-difference | residual
    std::optional<std::string> out;
    std::optional<std::vector<double>> snapshots;
    std::optional<std::vector<std::size_t>> grids;
};

/// Throws Error{invalid_argument} on unknown keys or mistyped values.
Overrides overrides_from_json(const nlohmann::json& j);
/// Fields set in `top` win over those in `base`.
Overrides merge(const Overrides& base, const Overrides& top);

struct Settings {
    BenchmarkId problem = BenchmarkId::stationary_ou;
    std::size_t n_cells = 81;
    Scheme scheme = Scheme::stationary;
    TauLaw tau_law = TauLaw::table2;
    /// Explicit step; when empty the tau law decides per grid.
    std::optional<double> tau;
    double t_final = 1.0;
    RunOptions options;
    std::filesystem::path out = "fpcc-output";
    std::vector<std::size_t> grids = {27, 81, 243};

    double tau_for_grid(std::size_t n_cells) const;
};

/// Throws Error{unknown_id | invalid_argument}.
Settings resolve(const Overrides& o);

/// Throws Error{invalid_argument} unless every entry is divisible by three
/// and each grid is three times the previous one.
void validate_grids(const std::vector<std::size_t>& grids);

/// Exit status for a library error: 2 for bad input, 1 for solver failures.
int exit_code_for(ErrorCode code) noexcept;

RunReport execute(const Settings& s, std::size_t n_cells);
nlohmann::json settings_json(const Settings& s, std::size_t n_cells);

/// Entry point shared by the executable and the tests; args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fpcc::cli
