#include "fpcc/transfer.hpp"

#include <string>

#include "fpcc/error.hpp"
#include "fpcc/kernels.hpp"

namespace fpcc {

CellVector restrict_injection(const GridHierarchy& hier, std::span<const double> fine) {
    if (fine.size() != hier.fine.n_cells()) {
        throw Error(ErrorCode::size_mismatch, "restriction input has " +
                                                  std::to_string(fine.size()) + " entries, fine grid " +
                                                  std::to_string(hier.fine.n_cells()));
    }
    CellVector coarse(hier.coarse.n_cells());
    kernels::restrict_injection(fine, coarse);
    return coarse;
}

CellVector prolong_quadratic(const GridHierarchy& hier, std::span<const double> coarse) {
    if (coarse.size() != hier.coarse.n_cells()) {
        throw Error(ErrorCode::size_mismatch, "prolongation input has " +
                                                  std::to_string(coarse.size()) +
                                                  " entries, coarse grid " +
                                                  std::to_string(hier.coarse.n_cells()));
    }
    if (coarse.size() < 3) {
        throw Error(ErrorCode::coarse_too_small, "quadratic prolongation needs 3 coarse cells");
    }
    CellVector fine(hier.fine.n_cells());
    kernels::prolong_quadratic(coarse, fine);
    return fine;
}

EdgeVector restrict_edges(const GridHierarchy& hier, std::span<const double> fine_edges) {
    if (fine_edges.size() != hier.fine.n_cells() + 1) {
        throw Error(ErrorCode::size_mismatch, "edge restriction input has the wrong length");
    }
    EdgeVector coarse(hier.coarse.n_cells() + 1);
    for (std::size_t i = 0; i < coarse.size(); ++i) {
        coarse[i] = fine_edges[GridHierarchy::coarse_to_fine_edge(i)];
    }
    return coarse;
}

}  // namespace fpcc
