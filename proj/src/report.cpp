#include "fpcc/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fpcc/error.hpp"

namespace fpcc {

namespace {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_double(const std::string& field) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(field, &used);
    } catch (const std::exception&) {
        throw Error(ErrorCode::invalid_argument, "not a number: '" + field + "'");
    }
    if (used != field.size()) {
        throw Error(ErrorCode::invalid_argument, "not a number: '" + field + "'");
    }
    return v;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, sep)) out.push_back(field);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

}  // namespace

std::optional<ErrorRecord> table_errors(const RunReport& report) {
    if (report.error_spacetime) return report.error_spacetime;
    return report.error_final;
}

nlohmann::json to_json(const ErrorRecord& r) {
    return {{"n_cells", r.n_cells}, {"n_steps", r.n_steps},   {"l1_paper", r.l1_paper},
            {"l2_paper", r.l2_paper}, {"l1_std", r.l1_std}, {"l2_std", r.l2_std},
            {"linf", r.linf}};
}

ErrorRecord error_record_from_json(const nlohmann::json& j) {
    ErrorRecord r;
    r.n_cells = j.at("n_cells").get<std::size_t>();
    r.n_steps = j.at("n_steps").get<std::size_t>();
    r.l1_paper = j.at("l1_paper").get<double>();
    r.l2_paper = j.at("l2_paper").get<double>();
    r.l1_std = j.at("l1_std").get<double>();
    r.l2_std = j.at("l2_std").get<double>();
    r.linf = j.at("linf").get<double>();
    return r;
}

nlohmann::json to_json(const RunReport& report) {
    nlohmann::json j;
    j["problem"] = report.problem;
    j["scheme"] = std::string(to_string(report.scheme));
    j["n_cells"] = report.n_cells;
    j["x_left"] = report.x_left;
    j["x_right"] = report.x_right;
    j["h"] = report.h;
    j["tau"] = report.tau;
    j["t_final"] = report.t_final;
    j["steps"] = report.steps;
    j["cycles_per_step"] = report.cycles_per_step;
    j["tg_cycles_max"] = report.max_cycles();
    j["mass_history"] = report.mass_history;
    j["min_value_history"] = report.min_value_history;
    if (const auto e = table_errors(report)) {
        j["error_norms"] = {{"l1_paper", e->l1_paper}, {"l2_paper", e->l2_paper}};
    } else {
        j["error_norms"] = nullptr;
    }
    j["error_final"] = report.error_final ? to_json(*report.error_final) : nlohmann::json();
    j["error_spacetime"] =
        report.error_spacetime ? to_json(*report.error_spacetime) : nlohmann::json();
    j["error_scaling"] = report.error_scaling ? nlohmann::json(*report.error_scaling)
                                              : nlohmann::json();
    nlohmann::json snaps = nlohmann::json::array();
    for (const Snapshot& s : report.snapshots) snaps.push_back({{"t", s.t}, {"u", s.u}});
    j["snapshots"] = std::move(snaps);
    j["solution"] = report.solution;
    j["wall_time"] = report.wall_time;
    return j;
}

std::string summary_line(const RunReport& report) {
    char buf[320];
    const auto e = table_errors(report);
    if (e) {
        std::snprintf(buf, sizeof buf,
                      "%s %s N=%zu steps=%zu l1_paper=%.4e l2_paper=%.4e linf=%.4e tg_max=%d "
                      "cpu=%.3fs",
                      report.problem.c_str(), std::string(to_string(report.scheme)).c_str(),
                      report.n_cells, report.steps, e->l1_paper, e->l2_paper, e->linf,
                      report.max_cycles(), report.wall_time);
    } else {
        std::snprintf(buf, sizeof buf, "%s %s N=%zu steps=%zu mass=%.12g tg_max=%d cpu=%.3fs",
                      report.problem.c_str(), std::string(to_string(report.scheme)).c_str(),
                      report.n_cells, report.steps,
                      report.mass_history.empty() ? 0.0 : report.mass_history.back(),
                      report.max_cycles(), report.wall_time);
    }
    return buf;
}

std::string snapshot_filename(double t) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "snapshot_t%.6g.dat", t);
    return buf;
}

void write_snapshot(const std::filesystem::path& path, const StaggeredGrid& grid,
                    const Snapshot& snapshot) {
    if (snapshot.u.size() != grid.n_cells()) {
        throw Error(ErrorCode::size_mismatch, "snapshot does not match the grid");
    }
    std::string text;
    for (std::size_t k = 0; k < snapshot.u.size(); ++k) {
        text += format_double(grid.center(k));
        text += ' ';
        text += format_double(snapshot.u[k]);
        text += '\n';
    }
    write_text(path, text);
}

std::vector<ConvergenceRow> convergence_rows(const std::vector<RunReport>& runs,
                                             double refinement_factor) {
    std::vector<ConvergenceRow> rows;
    for (const RunReport& run : runs) {
        const auto e = table_errors(run);
        if (!e) {
            throw Error(ErrorCode::invalid_argument,
                        "run of " + run.problem + " has no exact solution to measure against");
        }
        ConvergenceRow row;
        row.n_cells = run.n_cells;
        row.n_steps = run.steps;
        row.l1_paper = e->l1_paper;
        row.l2_paper = e->l2_paper;
        row.tg_cycles_max = run.max_cycles();
        row.wall_seconds = run.wall_time;
        if (!rows.empty() && rows.back().l2_paper > 0.0 && row.l2_paper > 0.0) {
            row.order_est =
                std::log(rows.back().l2_paper / row.l2_paper) / std::log(refinement_factor);
        }
        rows.push_back(row);
    }
    return rows;
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
    std::string out = kConvergenceHeader;
    out += '\n';
    for (const ConvergenceRow& r : rows) {
        out += std::to_string(r.n_cells) + ',' + std::to_string(r.n_steps) + ',' +
               format_double(r.l1_paper) + ',' + format_double(r.l2_paper) + ',' +
               (r.order_est ? format_double(*r.order_est) : std::string()) + ',' +
               std::to_string(r.tg_cycles_max) + ',' + format_double(r.wall_seconds) + '\n';
    }
    return out;
}

std::vector<ConvergenceRow> parse_convergence_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kConvergenceHeader) {
        throw Error(ErrorCode::invalid_argument, "missing convergence table header");
    }
    std::vector<ConvergenceRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split(line, ',');
        if (f.size() != 7) {
            throw Error(ErrorCode::invalid_argument, "expected 7 fields in '" + line + "'");
        }
        ConvergenceRow r;
        r.n_cells = static_cast<std::size_t>(parse_double(f[0]));
        r.n_steps = static_cast<std::size_t>(parse_double(f[1]));
        r.l1_paper = parse_double(f[2]);
        r.l2_paper = parse_double(f[3]);
        if (!f[4].empty()) r.order_est = parse_double(f[4]);
        r.tg_cycles_max = static_cast<int>(parse_double(f[5]));
        r.wall_seconds = parse_double(f[6]);
        rows.push_back(r);
    }
    return rows;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::io_failure, "cannot open " + path.string());
    out << text;
    if (!out) throw Error(ErrorCode::io_failure, "cannot write " + path.string());
}

}  // namespace fpcc
