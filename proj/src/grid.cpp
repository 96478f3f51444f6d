#include "fpcc/grid.hpp"

#include <cmath>
#include <string>

#include "fpcc/error.hpp"

namespace fpcc {

StaggeredGrid::StaggeredGrid(double x_left, double x_right, std::size_t n_cells)
    : x_left_(x_left), x_right_(x_right), n_cells_(n_cells) {
    if (!std::isfinite(x_left) || !std::isfinite(x_right) || !(x_left < x_right)) {
        throw Error(ErrorCode::invalid_domain, "require finite x_left < x_right, got [" +
                                                   std::to_string(x_left) + ", " +
                                                   std::to_string(x_right) + "]");
    }
    if (n_cells < 3) {
        throw Error(ErrorCode::too_few_cells,
                    "need at least 3 cells, got " + std::to_string(n_cells));
    }
    h_ = (x_right - x_left) / static_cast<double>(n_cells);
}

double StaggeredGrid::center(std::size_t k) const noexcept {
    // (2k+1)/(2N) is the same real number on nested grids, so coincident
    // centers round identically.
    const double frac = static_cast<double>(2 * k + 1) / static_cast<double>(2 * n_cells_);
    return x_left_ + width() * frac;
}

double StaggeredGrid::edge(std::size_t j) const noexcept {
    if (j == 0) return x_left_;
    if (j >= n_cells_) return x_right_;
    const double frac = static_cast<double>(j) / static_cast<double>(n_cells_);
    return x_left_ + width() * frac;
}

std::vector<double> StaggeredGrid::centers() const {
    std::vector<double> out(n_cells_);
    for (std::size_t k = 0; k < n_cells_; ++k) out[k] = center(k);
    return out;
}

std::vector<double> StaggeredGrid::edges() const {
    std::vector<double> out(n_cells_ + 1);
    for (std::size_t j = 0; j <= n_cells_; ++j) out[j] = edge(j);
    return out;
}

StaggeredGrid make_grid(double x_left, double x_right, std::size_t n_cells) {
    return StaggeredGrid(x_left, x_right, n_cells);
}

GridHierarchy make_hierarchy(const StaggeredGrid& fine) {
    const std::size_t n = fine.n_cells();
    if (n % 3 != 0) {
        throw Error(ErrorCode::not_divisible_by_three,
                    "fine cell count " + std::to_string(n) + " is not a multiple of 3");
    }
    if (n / 3 < 3) {
        throw Error(ErrorCode::coarse_too_small,
                    "coarse grid would have " + std::to_string(n / 3) + " cells (need >= 3)");
    }
    return GridHierarchy{fine, StaggeredGrid(fine.x_left(), fine.x_right(), n / 3)};
}

GridHierarchy make_hierarchy(double x_left, double x_right, std::size_t n_cells) {
    return make_hierarchy(make_grid(x_left, x_right, n_cells));
}

}  // namespace fpcc
