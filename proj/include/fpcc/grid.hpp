#pragma once

#include <cstddef>
#include <vector>

namespace fpcc {

/// Uniform staggered grid on [x_left, x_right].
///
/// Cells are indexed 0..N-1 and hold the solution; edges are indexed 0..N
/// and hold fluxes. Edge j separates cell j-1 (left) from cell j (right), so
/// edges 0 and N lie on the boundary. Coordinates are evaluated with an
/// affine formula, never by accumulation.
class StaggeredGrid {
public:
    StaggeredGrid(double x_left, double x_right, std::size_t n_cells);

    double x_left() const noexcept { return x_left_; }
    double x_right() const noexcept { return x_right_; }
    std::size_t n_cells() const noexcept { return n_cells_; }
    double h() const noexcept { return h_; }
    double width() const noexcept { return x_right_ - x_left_; }

    /// Center of cell k, k in [0, N).
    double center(std::size_t k) const noexcept;
    /// Edge j, j in [0, N]. edge(0) == x_left and edge(N) == x_right exactly.
    double edge(std::size_t j) const noexcept;

    std::vector<double> centers() const;
    std::vector<double> edges() const;

    bool same_domain(double x_left, double x_right) const noexcept {
        return x_left_ == x_left && x_right_ == x_right;
    }

private:
    double x_left_;
    double x_right_;
    std::size_t n_cells_;
    double h_;
};

/// Throws Error{invalid_domain | too_few_cells}.
StaggeredGrid make_grid(double x_left, double x_right, std::size_t n_cells);

/// Fine grid plus its factor-three coarsening. Coarse cell I covers fine
/// cells 3I, 3I+1, 3I+2; its center coincides with the center of fine cell
/// 3I+1. Coarse edge I coincides with fine edge 3I.
struct GridHierarchy {
    StaggeredGrid fine;
    StaggeredGrid coarse;

    static constexpr std::size_t coarse_to_fine_cell(std::size_t coarse_cell) noexcept {
        return 3 * coarse_cell + 1;
    }
    static constexpr std::size_t coarse_to_fine_edge(std::size_t coarse_edge) noexcept {
        return 3 * coarse_edge;
    }
};

/// Throws Error{not_divisible_by_three | coarse_too_small}.
GridHierarchy make_hierarchy(const StaggeredGrid& fine);

/// Shorthand for make_hierarchy(make_grid(...)).
GridHierarchy make_hierarchy(double x_left, double x_right, std::size_t n_cells);

}  // namespace fpcc
