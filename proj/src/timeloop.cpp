#include "fpcc/timeloop.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <span>
#include <string>
#include <utility>

#include "fpcc/error.hpp"
#include "fpcc/linalg.hpp"

namespace fpcc {

int RunReport::max_cycles() const noexcept {
    return cycles_per_step.empty() ? 0
                                   : *std::max_element(cycles_per_step.begin(),
                                                       cycles_per_step.end());
}

std::size_t step_count(double t_final, double tau) {
    if (!(tau > 0.0) || !std::isfinite(tau)) {
        throw Error(ErrorCode::nonpositive_tau, "tau = " + std::to_string(tau));
    }
    const double ratio = t_final / tau;
    const double rounded = std::round(ratio);
    if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-6 * std::max(1.0, rounded)) {
        throw Error(ErrorCode::nonintegral_step_count,
                    "t_final / tau = " + std::to_string(ratio) + " is not a whole number");
    }
    return static_cast<std::size_t>(rounded);
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Fine and coarse operators for one scheme, reassembled only when the
// coefficients depend on time.
class StepOperators {
public:
    StepOperators(const ProblemSpec& p, const GridHierarchy& hier, Scheme scheme, double tau)
        : p_(p), hier_(hier), scheme_(scheme), tau_(tau) {}

    void update(double t) {
        if (valid_ && p_.time_independent_coefficients) return;
        fine_ = assemble_operator(edge_coefficients(p_, hier_.fine, t), scheme_, tau_);
        coarse_ = assemble_operator(edge_coefficients(p_, hier_.coarse, t), scheme_, tau_);
        valid_ = true;
    }

    TridiagonalSystem& fine() { return fine_; }
    const TridiagonalSystem& coarse() const { return coarse_; }

private:
    const ProblemSpec& p_;
    const GridHierarchy& hier_;
    Scheme scheme_;
    double tau_;
    bool valid_ = false;
    TridiagonalSystem fine_;
    TridiagonalSystem coarse_;
};

struct StepSolution {
    CellVector u;
    int cycles = 0;
};

StepSolution solve_step(const TridiagonalSystem& fine, const TridiagonalSystem& coarse,
                        const GridHierarchy& hier, std::span<const double> guess,
                        const RunOptions& opts) {
    if (opts.solver == LinearSolver::direct) return {thomas_solve(fine), 0};
    SolveResult r = solve_to_tolerance(fine, coarse, hier, guess, opts.cycle);
    return {std::move(r.u), r.cycles};
}

class Recorder {
public:
    Recorder(const ProblemSpec& p, const GridHierarchy& hier, double tau, std::size_t steps,
             const RunOptions& opts, RunReport& report)
        : p_(p), grid_(hier.fine), tau_(tau), steps_(steps), report_(report),
          norms_(hier.fine.h(), tau) {
        for (double t : opts.snapshot_times) {
            const double level = std::clamp(std::round(t / tau), 0.0, static_cast<double>(steps));
            snapshot_levels_.push_back(static_cast<std::size_t>(level));
        }
        snapshot_levels_.push_back(steps);
        std::sort(snapshot_levels_.begin(), snapshot_levels_.end());
        snapshot_levels_.erase(std::unique(snapshot_levels_.begin(), snapshot_levels_.end()),
                               snapshot_levels_.end());
        report_.cycles_per_step.reserve(steps + 1);
        report_.mass_history.reserve(steps + 1);
        report_.min_value_history.reserve(steps + 1);
    }

    void record(std::size_t level, std::span<const double> u, int cycles) {
        const double t = static_cast<double>(level) * tau_;
        report_.cycles_per_step.push_back(cycles);
        report_.mass_history.push_back(mass(u, grid_.h()));
        report_.min_value_history.push_back(*std::min_element(u.begin(), u.end()));
        if (std::binary_search(snapshot_levels_.begin(), snapshot_levels_.end(), level)) {
            report_.snapshots.push_back({t, CellVector(u.begin(), u.end())});
        }
        if (p_.exact) {
            CellVector e = sample_centers(*p_.exact, grid_, t);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = u[i] - e[i];
            norms_.add(e);
            if (level == steps_) {
                ErrorRecord final = norms_stationary(e, grid_.h());
                final.n_steps = steps_;
                report_.error_final = final;
                report_.error_spacetime = norms_.record();
            }
        }
    }

private:
    const ProblemSpec& p_;
    const StaggeredGrid& grid_;
    double tau_;
    std::size_t steps_;
    RunReport& report_;
    SpaceTimeNorms norms_;
    std::vector<std::size_t> snapshot_levels_;
};

void check_hierarchy(const ProblemSpec& p, const GridHierarchy& hier) {
    if (!hier.fine.same_domain(p.x_left, p.x_right)) {
        throw Error(ErrorCode::invalid_argument, "grid does not match the problem domain");
    }
}

RunReport init_report(const ProblemSpec& p, const GridHierarchy& hier, Scheme scheme,
                      double tau, std::size_t steps) {
    RunReport report;
    report.problem = p.name;
    report.scheme = scheme;
    report.n_cells = hier.fine.n_cells();
    report.x_left = hier.fine.x_left();
    report.x_right = hier.fine.x_right();
    report.h = hier.fine.h();
    report.tau = tau;
    report.t_final = static_cast<double>(steps) * tau;
    report.steps = steps;
    return report;
}

}  // namespace

RunReport run_from(const ProblemSpec& p, const GridHierarchy& hier, Scheme scheme, double tau,
                   std::size_t steps, CellVector u0, const RunOptions& opts) {
    const auto start = Clock::now();
    check_hierarchy(p, hier);
    if (scheme == Scheme::stationary) {
        throw Error(ErrorCode::invalid_argument, "run_from needs a time-stepping scheme");
    }
    if (!(tau > 0.0)) throw Error(ErrorCode::nonpositive_tau, "tau = " + std::to_string(tau));
    if (scheme == Scheme::bdf2 && steps < 2) {
        throw Error(ErrorCode::too_few_steps, "bdf2 needs at least two steps");
    }
    if (u0.size() != hier.fine.n_cells()) {
        throw Error(ErrorCode::size_mismatch, "initial vector has the wrong length");
    }
    opts.cycle.validate();

    RunReport report = init_report(p, hier, scheme, tau, steps);
    Recorder recorder(p, hier, tau, steps, opts, report);

    StepOperators first_order(p, hier, Scheme::bdf1, tau);
    std::optional<StepOperators> second_order;
    if (scheme == Scheme::bdf2) second_order.emplace(p, hier, Scheme::bdf2, tau);

    CellVector current = std::move(u0);
    CellVector previous;
    recorder.record(0, current, 0);
    for (std::size_t m = 0; m < steps; ++m) {
        const double t_now = static_cast<double>(m) * tau;
        const double t_next = static_cast<double>(m + 1) * tau;
        const bool use_bdf2 = second_order && m >= 1;
        StepOperators& ops = use_bdf2 ? *second_order : first_order;
        ops.update(t_now);
        const CellVector g = sample_centers(p.source, hier.fine, t_next);
        std::optional<std::span<const double>> older;
        if (use_bdf2) older = std::span<const double>(previous);
        fill_step_rhs(use_bdf2 ? Scheme::bdf2 : Scheme::bdf1, tau, current, older, g,
                      ops.fine().rhs);
        StepSolution next = solve_step(ops.fine(), ops.coarse(), hier, current, opts);
        previous = std::move(current);
        current = std::move(next.u);
        recorder.record(m + 1, current, next.cycles);
    }
    report.solution = std::move(current);
    report.wall_time = seconds_since(start);
    return report;
}

RunReport run_time_dependent(const ProblemSpec& p, const GridHierarchy& hier, Scheme scheme,
                             double tau, const RunOptions& opts) {
    const std::size_t steps = step_count(p.t_final, tau);
    return run_from(p, hier, scheme, tau, steps, sample_centers(p.initial, hier.fine), opts);
}

RunReport run_bdf1(const ProblemSpec& p, const GridHierarchy& hier, double tau,
                   const RunOptions& opts) {
    return run_time_dependent(p, hier, Scheme::bdf1, tau, opts);
}

RunReport run_bdf2(const ProblemSpec& p, const GridHierarchy& hier, double tau,
                   const RunOptions& opts) {
    return run_time_dependent(p, hier, Scheme::bdf2, tau, opts);
}

StationaryResult solve_stationary(const ProblemSpec& p, const GridHierarchy& hier,
                                  const CycleConfig& cfg) {
    check_hierarchy(p, hier);
    if (!cfg.normalize) {
        throw Error(ErrorCode::invalid_argument,
                    "stationary solves need normalization (the operator is singular)");
    }
    CycleConfig stationary_cfg = cfg;
    stationary_cfg.coarse_solve = CoarseSolve::pinned;
    TridiagonalSystem fine = assemble_operator(edge_coefficients(p, hier.fine, 0.0),
                                               Scheme::stationary, 0.0);
    const TridiagonalSystem coarse = assemble_operator(edge_coefficients(p, hier.coarse, 0.0),
                                                       Scheme::stationary, 0.0);
    const CellVector guess(hier.fine.n_cells(), 1.0 / hier.fine.width());
    SolveResult r = solve_to_tolerance(fine, coarse, hier, guess, stationary_cfg);
    // Post-smoothing runs after the in-cycle renormalization.
    return {normalize(r.u, hier.fine.h()), r.cycles};
}

RunReport run_stationary(const ProblemSpec& p, const GridHierarchy& hier,
                         const CycleConfig& cfg) {
    const auto start = Clock::now();
    StationaryResult s = solve_stationary(p, hier, cfg);
    RunReport report = init_report(p, hier, Scheme::stationary, 0.0, 0);
    report.t_final = 0.0;
    report.cycles_per_step = {s.cycles};
    report.mass_history = {mass(s.u, hier.fine.h())};
    report.min_value_history = {*std::min_element(s.u.begin(), s.u.end())};
    std::optional<CellVector> reference;
    if (p.steady_state) {
        reference = sample_centers(*p.steady_state, hier.fine);
    } else if (p.exact) {
        reference = sample_centers(*p.exact, hier.fine, 0.0);
    }
    if (reference) {
        const CellVector& exact = *reference;
        const double scaling = mass(exact, hier.fine.h()) / mass(s.u, hier.fine.h());
        CellVector e(exact.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = scaling * s.u[i] - exact[i];
        report.error_final = norms_stationary(e, hier.fine.h());
        report.error_scaling = scaling;
    }
    report.snapshots.push_back({0.0, s.u});
    report.solution = std::move(s.u);
    report.wall_time = seconds_since(start);
    return report;
}

}  // namespace fpcc
