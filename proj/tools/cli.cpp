#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "fpcc/grid.hpp"
#include "fpcc/metrics.hpp"
#include "fpcc/report.hpp"

namespace fpcc::cli {

namespace {

template <class T>
void read_key(const nlohmann::json& j, const char* key, std::optional<T>& field) {
    if (!j.contains(key)) return;
    try {
        field = j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::invalid_argument,
                    std::string("config key '") + key + "': " + e.what());
    }
}

template <class T>
void take(std::optional<T>& dst, const std::optional<T>& src) {
    if (src) dst = src;
}

std::vector<double> parse_number_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) {
            throw Error(ErrorCode::invalid_argument, "not a number in list: '" + item + "'");
        }
        out.push_back(v);
    }
    return out;
}

std::vector<std::size_t> parse_grid_list(const std::string& text) {
    std::vector<std::size_t> out;
    for (double v : parse_number_list(text)) {
        if (!(v >= 1.0) || v != static_cast<double>(static_cast<std::size_t>(v))) {
            throw Error(ErrorCode::invalid_argument, "grid sizes must be positive integers");
        }
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

std::string format_g(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

nlohmann::json report_json(const Settings& s, const RunReport& r) {
    nlohmann::json j = to_json(r);
    j["config"] = settings_json(s, r.n_cells);
    return j;
}

void write_run_outputs(const Settings& s, const RunReport& r, const StaggeredGrid& grid) {
    std::filesystem::create_directories(s.out);
    write_text(s.out / "report.json", report_json(s, r).dump(2) + "\n");
    for (const Snapshot& snap : r.snapshots) {
        write_snapshot(s.out / snapshot_filename(snap.t), grid, snap);
    }
}

int cmd_run(const Settings& s, std::ostream& out) {
    const RunReport r = execute(s, s.n_cells);
    write_run_outputs(s, r, make_grid(r.x_left, r.x_right, r.n_cells));
    out << summary_line(r) << '\n';
    return 0;
}

int cmd_convergence(const Settings& s, std::ostream& out) {
    validate_grids(s.grids);
    std::vector<RunReport> runs;
    for (std::size_t n : s.grids) runs.push_back(execute(s, n));
    const std::vector<ConvergenceRow> rows = convergence_rows(runs);

    std::filesystem::create_directories(s.out);
    write_text(s.out / "convergence.csv", convergence_csv(rows));
    for (const RunReport& r : runs) {
        write_text(s.out / ("run_N" + std::to_string(r.n_cells) + ".json"),
                   report_json(s, r).dump(2) + "\n");
    }

    out << to_string(s.problem) << ' ' << to_string(s.scheme) << " tau-law "
        << to_string(s.tau_law) << '\n';
    out << std::setw(16) << "N x N_t" << std::setw(14) << "l1_paper" << std::setw(14)
        << "l2_paper" << std::setw(8) << "order" << std::setw(6) << "#TG" << std::setw(10)
        << "CPU(s)" << '\n';
    for (const ConvergenceRow& row : rows) {
        char line[160];
        std::snprintf(line, sizeof line, "%16s%14.4e%14.4e%8s%6d%10.3f",
                      (std::to_string(row.n_cells) + " x " + std::to_string(row.n_steps)).c_str(),
                      row.l1_paper, row.l2_paper,
                      row.order_est ? format_g(*row.order_est).substr(0, 6).c_str() : "-",
                      row.tg_cycles_max, row.wall_seconds);
        out << line << '\n';
    }
    std::vector<double> l2;
    for (const ConvergenceRow& row : rows) l2.push_back(row.l2_paper);
    out << "fitted order (l2_paper): " << format_g(convergence_order(l2, 3.0)) << '\n';
    return 0;
}

int cmd_list(std::ostream& out) {
    for (BenchmarkId id : all_benchmarks()) {
        const BenchmarkDefaults d = defaults_for(id);
        const ProblemSpec p = builtin(id);
        out << to_string(id) << "\n    " << describe(id) << "\n    default: scheme "
            << to_string(d.scheme) << ", N " << d.n_cells << ", tau-law "
            << to_string(d.tau_law) << ", T " << format_g(p.t_final) << ", normalize "
            << (d.normalize ? "on" : "off") << '\n';
    }
    return 0;
}

void add_common(CLI::App& cmd, Overrides& o, std::string& config_path,
                std::string& snapshots) {
    cmd.add_option("--config", config_path, "JSON file with default settings");
    cmd.add_option("--problem", o.problem, "benchmark id (see list-problems)");
    cmd.add_option("--scheme", o.scheme, "stationary | bdf1 | bdf2");
    cmd.add_option("--tau", o.tau, "time step (overrides --tau-law)");
    cmd.add_option("--tau-law", o.tau_law, "table2 | table4 | fig5");
    cmd.add_option("--t-final", o.t_final, "time horizon");
    cmd.add_option("--m1", o.m1, "pre-smoothing sweeps (default 3)");
    cmd.add_option("--m2", o.m2, "post-smoothing sweeps (default 3)");
    cmd.add_option("--tol", o.tol, "stopping tolerance (default 1e-8)");
    cmd.add_option("--max-cycles", o.max_cycles, "two-level cycles per solve (default 100)");
    cmd.add_option("--normalize", o.normalize, "on | off | auto");
    cmd.add_option("--smoother", o.smoother,
                   "symmetric-gauss-seidel | gauss-seidel | damped-jacobi");
    cmd.add_option("--solver", o.solver, "two-level | direct");
    cmd.add_option("--stopping", o.stopping, "norm-difference | residual");
    cmd.add_option("--out", o.out, "output directory");
    cmd.add_option("--snapshots", snapshots, "comma-separated snapshot times");
}

Overrides load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::invalid_argument, "cannot read config file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::invalid_argument, "config file " + path + ": " + e.what());
    }
    return overrides_from_json(j);
}

}  // namespace

Overrides overrides_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw Error(ErrorCode::invalid_argument, "config must be a JSON object");
    static const char* const known[] = {
        "problem", "cells",    "scheme",   "tau",      "tau_law", "t_final",
        "m1",      "m2",       "tol",      "max_cycles", "normalize", "smoother",
        "solver",  "stopping", "out",      "snapshots", "grids"};
    for (const auto& item : j.items()) {
        bool found = false;
        for (const char* k : known) found = found || item.key() == k;
        if (!found) throw Error(ErrorCode::invalid_argument, "unknown config key '" + item.key() + "'");
    }
    Overrides o;
    read_key(j, "problem", o.problem);
    read_key(j, "cells", o.cells);
    read_key(j, "scheme", o.scheme);
    read_key(j, "tau", o.tau);
    read_key(j, "tau_law", o.tau_law);
    read_key(j, "t_final", o.t_final);
    read_key(j, "m1", o.m1);
    read_key(j, "m2", o.m2);
    read_key(j, "tol", o.tol);
    read_key(j, "max_cycles", o.max_cycles);
    if (j.contains("normalize") && j.at("normalize").is_boolean()) {
        o.normalize = j.at("normalize").get<bool>() ? "on" : "off";
    } else {
        read_key(j, "normalize", o.normalize);
    }
    read_key(j, "smoother", o.smoother);
    read_key(j, "solver", o.solver);
    read_key(j, "stopping", o.stopping);
    read_key(j, "out", o.out);
    read_key(j, "snapshots", o.snapshots);
    read_key(j, "grids", o.grids);
    return o;
}

Overrides merge(const Overrides& base, const Overrides& top) {
    Overrides o = base;
    take(o.problem, top.problem);
    take(o.cells, top.cells);
    take(o.scheme, top.scheme);
    take(o.tau, top.tau);
    take(o.tau_law, top.tau_law);
    take(o.t_final, top.t_final);
    take(o.m1, top.m1);
    take(o.m2, top.m2);
    take(o.tol, top.tol);
    take(o.max_cycles, top.max_cycles);
    take(o.normalize, top.normalize);
    take(o.smoother, top.smoother);
    take(o.solver, top.solver);
    take(o.stopping, top.stopping);
    take(o.out, top.out);
    take(o.snapshots, top.snapshots);
    take(o.grids, top.grids);
    return o;
}

double Settings::tau_for_grid(std::size_t cells) const {
    return tau ? *tau : tau_for(tau_law, cells, t_final);
}

Settings resolve(const Overrides& o) {
    if (!o.problem) throw Error(ErrorCode::invalid_argument, "no problem given (use --problem)");
    Settings s;
    s.problem = parse_benchmark(*o.problem);
    const BenchmarkDefaults d = defaults_for(s.problem);
    const ProblemSpec p = builtin(s.problem);

    s.n_cells = o.cells.value_or(d.n_cells);
    s.scheme = d.scheme;
    if (o.scheme) {
        const auto scheme = parse_scheme(*o.scheme);
        if (!scheme) throw Error(ErrorCode::invalid_argument, "unknown scheme '" + *o.scheme + "'");
        s.scheme = *scheme;
    }
    s.tau_law = d.tau_law;
    if (o.tau_law) {
        const auto law = parse_tau_law(*o.tau_law);
        if (!law) throw Error(ErrorCode::invalid_argument, "unknown tau law '" + *o.tau_law + "'");
        s.tau_law = *law;
    }
    s.tau = o.tau;
    s.t_final = o.t_final.value_or(p.t_final);
    if (!(s.t_final > 0.0)) throw Error(ErrorCode::invalid_argument, "t-final must be positive");

    CycleConfig& c = s.options.cycle;
    c.m1 = o.m1.value_or(c.m1);
    c.m2 = o.m2.value_or(c.m2);
    c.tol = o.tol.value_or(c.tol);
    c.max_cycles = o.max_cycles.value_or(c.max_cycles);
    const std::string normalize = o.normalize.value_or("auto");
    if (normalize == "on") {
        c.normalize = true;
    } else if (normalize == "off") {
        c.normalize = false;
    } else if (normalize == "auto") {
        c.normalize = s.scheme == Scheme::stationary || d.normalize;
    } else {
        throw Error(ErrorCode::invalid_argument, "--normalize expects on, off or auto");
    }
    if (o.smoother) {
        const auto sm = parse_smoother(*o.smoother);
        if (!sm) throw Error(ErrorCode::invalid_argument, "unknown smoother '" + *o.smoother + "'");
        c.smoother = *sm;
    }
    if (o.stopping) {
        if (*o.stopping == "norm-difference") {
            c.stopping = StoppingRule::norm_difference;
        } else if (*o.stopping == "residual") {
            c.stopping = StoppingRule::residual;
        } else {
            throw Error(ErrorCode::invalid_argument, "unknown stopping rule '" + *o.stopping + "'");
        }
    }
    c.validate();
    if (o.solver) {
        if (*o.solver == "two-level") {
            s.options.solver = LinearSolver::two_level;
        } else if (*o.solver == "direct") {
            s.options.solver = LinearSolver::direct;
        } else {
            throw Error(ErrorCode::invalid_argument, "unknown solver '" + *o.solver + "'");
        }
    }
    s.options.snapshot_times = o.snapshots.value_or(d.snapshot_times);
    if (o.out) s.out = *o.out;
    if (o.grids) s.grids = *o.grids;
    return s;
}

void validate_grids(const std::vector<std::size_t>& grids) {
    if (grids.size() < 2) {
        throw Error(ErrorCode::invalid_argument, "a convergence sweep needs at least two grids");
    }
    for (std::size_t k = 0; k < grids.size(); ++k) {
        if (grids[k] % 3 != 0) {
            throw Error(ErrorCode::invalid_argument,
                        "grid " + std::to_string(grids[k]) + " is not divisible by 3");
        }
        if (k > 0 && grids[k] != 3 * grids[k - 1]) {
            throw Error(ErrorCode::invalid_argument,
                        "non-factor-3 sequence: " + std::to_string(grids[k - 1]) + " then " +
                            std::to_string(grids[k]));
        }
    }
}

int exit_code_for(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::invalid_domain:
    case ErrorCode::too_few_cells:
    case ErrorCode::not_divisible_by_three:
    case ErrorCode::coarse_too_small:
    case ErrorCode::nonpositive_tau:
    case ErrorCode::nonintegral_step_count:
    case ErrorCode::too_few_steps:
    case ErrorCode::invalid_argument:
    case ErrorCode::unknown_id:
        return 2;
    default:
        return 1;
    }
}

RunReport execute(const Settings& s, std::size_t n_cells) {
    ProblemSpec p = builtin(s.problem);
    p.t_final = s.t_final;
    const GridHierarchy hier = make_hierarchy(p.x_left, p.x_right, n_cells);
    if (s.scheme == Scheme::stationary) return run_stationary(p, hier, s.options.cycle);
    return run_time_dependent(p, hier, s.scheme, s.tau_for_grid(n_cells), s.options);
}

nlohmann::json settings_json(const Settings& s, std::size_t n_cells) {
    const CycleConfig& c = s.options.cycle;
    nlohmann::json j;
    j["problem"] = std::string(to_string(s.problem));
    j["n_cells"] = n_cells;
    j["scheme"] = std::string(to_string(s.scheme));
    j["tau_law"] = s.tau ? nlohmann::json() : nlohmann::json(std::string(to_string(s.tau_law)));
    j["tau"] = s.scheme == Scheme::stationary ? 0.0 : s.tau_for_grid(n_cells);
    j["t_final"] = s.t_final;
    j["m1"] = c.m1;
    j["m2"] = c.m2;
    j["tol"] = c.tol;
    j["max_cycles"] = c.max_cycles;
    j["normalize"] = c.normalize;
    j["smoother"] = std::string(to_string(c.smoother));
    j["stopping"] = c.stopping == StoppingRule::residual ? "residual" : "norm-difference";
    j["solver"] = s.options.solver == LinearSolver::direct ? "direct" : "two-level";
    j["snapshot_times"] = s.options.snapshot_times;
    return j;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fokker-Planck solver: Chang-Cooper discretization, BDF1/BDF2, two-level cycles",
                 "fpcc"};
    app.require_subcommand(1);

    Overrides run_flags;
    std::string run_config;
    std::string run_snapshots;
    CLI::App* run_cmd = app.add_subcommand("run", "solve one benchmark and write a JSON report");
    add_common(*run_cmd, run_flags, run_config, run_snapshots);
    run_cmd->add_option("--cells", run_flags.cells, "fine grid cells, divisible by 3");

    Overrides conv_flags;
    std::string conv_config;
    std::string conv_snapshots;
    std::string grids;
    CLI::App* conv_cmd =
        app.add_subcommand("convergence", "grid sweep with error table and fitted order");
    add_common(*conv_cmd, conv_flags, conv_config, conv_snapshots);
    conv_cmd->add_option("--grids", grids, "comma-separated cell counts, e.g. 81,243,729");

    CLI::App* list_cmd = app.add_subcommand("list-problems", "print the benchmark ids");

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("fpcc");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const std::string& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (list_cmd->parsed()) return cmd_list(out);
        const bool is_run = run_cmd->parsed();
        Overrides flags = is_run ? run_flags : conv_flags;
        const std::string& config = is_run ? run_config : conv_config;
        const std::string& snapshots = is_run ? run_snapshots : conv_snapshots;
        if (!snapshots.empty()) flags.snapshots = parse_number_list(snapshots);
        if (!grids.empty()) flags.grids = parse_grid_list(grids);
        const Overrides merged = config.empty() ? flags : merge(load_config(config), flags);
        const Settings settings = resolve(merged);
        return is_run ? cmd_run(settings, out) : cmd_convergence(settings, out);
    } catch (const Error& e) {
        err << "fpcc: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::filesystem::filesystem_error& e) {
        err << "fpcc: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace fpcc::cli
