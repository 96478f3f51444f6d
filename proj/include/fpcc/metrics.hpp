#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fpcc/operator.hpp"

namespace fpcc {

/// Error norms of one run. The "paper" norms follow the literal
/// definitions used by the benchmark tables (no square root, extra h or
/// tau*h factors); the standard norms are reported alongside.
///
///   stationary:  l1_paper = h sum|e|,          l2_paper = h^2 sum e^2
///   space-time:  l1_paper = h^2 tau sum|e|,    l2_paper = tau h^2 sum e^2
///   standard:    l1_std = h sum|e|, l2_std = sqrt(h sum e^2), linf = max|e|
///
/// Space-time sums run over every recorded time level; the standard norms of
/// a space-time record use the last level.
struct ErrorRecord {
    std::size_t n_cells = 0;
    std::size_t n_steps = 0;
    double l1_paper = 0.0;
    double l2_paper = 0.0;
    double l1_std = 0.0;
    double l2_std = 0.0;
    double linf = 0.0;
};

ErrorRecord norms_stationary(std::span<const double> e, double h);

/// Throws Error{empty_input}.
ErrorRecord norms_spacetime(const std::vector<CellVector>& errors_per_step, double h, double tau);

/// Streaming form of norms_spacetime for long runs.
class SpaceTimeNorms {
public:
    SpaceTimeNorms(double h, double tau) : h_(h), tau_(tau) {}

    void add(std::span<const double> e);
    std::size_t levels() const noexcept { return levels_; }
    /// Throws Error{empty_input} when nothing was added.
    ErrorRecord record() const;

private:
    double h_;
    double tau_;
    std::size_t levels_ = 0;
    double sum_abs_ = 0.0;
    double sum_sq_ = 0.0;
    ErrorRecord last_;
};

/// Least-squares slope of log(error) against log(h) when h shrinks by
/// `refinement_factor` between consecutive entries.
/// Throws Error{too_few_points | nonpositive_error | invalid_argument}.
double convergence_order(std::span<const double> errors, double refinement_factor);

/// h * sum(u)
double mass(std::span<const double> u, double h) noexcept;
/// h^2 * sum(u^2), the norm used by the iteration stopping rule.
double paper_l2(std::span<const double> u, double h) noexcept;
double max_abs(std::span<const double> u) noexcept;

}  // namespace fpcc
