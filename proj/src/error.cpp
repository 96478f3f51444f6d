#include "fpcc/error.hpp"

namespace fpcc {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::invalid_domain: return "invalid-domain";
    case ErrorCode::too_few_cells: return "too-few-cells";
    case ErrorCode::not_divisible_by_three: return "not-divisible-by-three";
    case ErrorCode::coarse_too_small: return "coarse-too-small";
    case ErrorCode::non_finite_input: return "non-finite-input";
    case ErrorCode::nonpositive_diffusion: return "nonpositive-diffusion";
    case ErrorCode::size_mismatch: return "size-mismatch";
    case ErrorCode::missing_history: return "missing-history";
    case ErrorCode::nonpositive_tau: return "nonpositive-tau";
    case ErrorCode::zero_pivot: return "zero-pivot";
    case ErrorCode::zero_diagonal: return "zero-diagonal";
    case ErrorCode::zero_mass: return "zero-mass";
    case ErrorCode::no_convergence: return "no-convergence";
    case ErrorCode::nonintegral_step_count: return "nonintegral-step-count";
    case ErrorCode::too_few_steps: return "too-few-steps";
    case ErrorCode::empty_input: return "empty-input";
    case ErrorCode::nonpositive_error: return "nonpositive-error";
    case ErrorCode::too_few_points: return "too-few-points";
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::unknown_id: return "unknown-id";
    case ErrorCode::io_failure: return "io-failure";
    }
    return "unknown-error";
}

}  // namespace fpcc
