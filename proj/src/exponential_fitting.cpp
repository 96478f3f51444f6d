#include "fpcc/exponential_fitting.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "fpcc/error.hpp"

namespace fpcc {

namespace {

// 1/2 - sum_k B_{2k} w^{2k-1} / (2k)!  through w^9; truncation < 1e-20 for |w| < 0.1.
double delta_series(double w) noexcept {
    const double w2 = w * w;
    const double odd =
        w * (1.0 / 12.0 +
             w2 * (-1.0 / 720.0 + w2 * (1.0 / 30240.0 + w2 * (-1.0 / 1209600.0 +
                                                               w2 * (1.0 / 47900160.0)))));
    return 0.5 - odd;
}

double delta_positive(double w) noexcept {
    // expm1 overflows to +inf past ~709, where the second term is 0 anyway.
    return 1.0 / w - 1.0 / std::expm1(w);
}

}  // namespace

double cc_delta(double omega) {
    if (!std::isfinite(omega)) {
        throw Error(ErrorCode::non_finite_input, "cc_delta(" + std::to_string(omega) + ")");
    }
    constexpr double below_one = 1.0 - std::numeric_limits<double>::epsilon() / 2.0;
    constexpr double above_zero = std::numeric_limits<double>::denorm_min();
    double d;
    if (std::abs(omega) < kSeriesThreshold) {
        d = delta_series(omega);
    } else if (omega > 0.0) {
        d = delta_positive(omega);
    } else {
        d = 1.0 - delta_positive(-omega);
    }
    if (d >= 1.0) d = below_one;
    if (d <= 0.0) d = above_zero;
    return d;
}

double bernoulli(double omega) noexcept {
    if (std::abs(omega) < kSeriesThreshold) {
        const double w2 = omega * omega;
        return 1.0 - omega / 2.0 +
               w2 * (1.0 / 12.0 + w2 * (-1.0 / 720.0 + w2 * (1.0 / 30240.0 - w2 / 1209600.0)));
    }
    return omega / std::expm1(omega);
}

}  // namespace fpcc
