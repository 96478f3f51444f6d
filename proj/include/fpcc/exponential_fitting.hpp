#pragma once

namespace fpcc {

/// Chang-Cooper weight  delta(omega) = 1/omega - 1/(exp(omega) - 1),
/// always in the open interval (0, 1). Small |omega| uses the Bernoulli
/// series; negative omega uses delta(-omega) = 1 - delta(omega).
/// Throws Error{non_finite_input}.
double cc_delta(double omega);

/// Bernoulli function  omega / (exp(omega) - 1), with value 1 at 0.
/// Positive for every finite omega; bernoulli(-w) = w + bernoulli(w).
double bernoulli(double omega) noexcept;

/// |omega| below this uses series expansions.
inline constexpr double kSeriesThreshold = 0.1;

}  // namespace fpcc
