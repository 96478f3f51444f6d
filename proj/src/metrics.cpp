#include "fpcc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fpcc/error.hpp"

namespace fpcc {

ErrorRecord norms_stationary(std::span<const double> e, double h) {
    double sum_abs = 0.0;
    double sum_sq = 0.0;
    double linf = 0.0;
    for (double v : e) {
        sum_abs += std::abs(v);
        sum_sq += v * v;
        linf = std::max(linf, std::abs(v));
    }
    ErrorRecord r;
    r.n_cells = e.size();
    r.l1_paper = h * sum_abs;
    r.l2_paper = h * h * sum_sq;
    r.l1_std = h * sum_abs;
    r.l2_std = std::sqrt(h * sum_sq);
    r.linf = linf;
    return r;
}

void SpaceTimeNorms::add(std::span<const double> e) {
    last_ = norms_stationary(e, h_);
    for (double v : e) {
        sum_abs_ += std::abs(v);
        sum_sq_ += v * v;
    }
    ++levels_;
}

ErrorRecord SpaceTimeNorms::record() const {
    if (levels_ == 0) throw Error(ErrorCode::empty_input, "no error levels recorded");
    ErrorRecord r = last_;
    r.n_steps = levels_ - 1;
    r.l1_paper = h_ * h_ * tau_ * sum_abs_;
    r.l2_paper = tau_ * h_ * h_ * sum_sq_;
    return r;
}

ErrorRecord norms_spacetime(const std::vector<CellVector>& errors_per_step, double h, double tau) {
    if (errors_per_step.empty()) throw Error(ErrorCode::empty_input, "no error levels given");
    SpaceTimeNorms acc(h, tau);
    for (const auto& e : errors_per_step) acc.add(e);
    return acc.record();
}

double convergence_order(std::span<const double> errors, double refinement_factor) {
    if (errors.size() < 2) {
        throw Error(ErrorCode::too_few_points, "need at least two errors");
    }
    if (!(refinement_factor > 1.0)) {
        throw Error(ErrorCode::invalid_argument,
                    "refinement factor must exceed 1, got " + std::to_string(refinement_factor));
    }
    for (double e : errors) {
        if (!(e > 0.0)) throw Error(ErrorCode::nonpositive_error, "error " + std::to_string(e));
    }
    // Regress log e on x_i = -i log(factor), i.e. log h up to a constant.
    const double n = static_cast<double>(errors.size());
    const double step = std::log(refinement_factor);
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < errors.size(); ++i) {
        const double x = -static_cast<double>(i) * step;
        const double y = std::log(errors[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double mass(std::span<const double> u, double h) noexcept {
    double s = 0.0;
    for (double v : u) s += v;
    return h * s;
}

double paper_l2(std::span<const double> u, double h) noexcept {
    double s = 0.0;
    for (double v : u) s += v * v;
    return h * h * s;
}

double max_abs(std::span<const double> u) noexcept {
    double m = 0.0;
    for (double v : u) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace fpcc
