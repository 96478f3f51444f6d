#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fpcc {

enum class ErrorCode {
    invalid_domain,
    too_few_cells,
    not_divisible_by_three,
    coarse_too_small,
    non_finite_input,
    nonpositive_diffusion,
    size_mismatch,
    missing_history,
    nonpositive_tau,
    zero_pivot,
    zero_diagonal,
    zero_mass,
    no_convergence,
    nonintegral_step_count,
    too_few_steps,
    empty_input,
    nonpositive_error,
    too_few_points,
    invalid_argument,
    unknown_id,
    io_failure,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// that callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace fpcc
