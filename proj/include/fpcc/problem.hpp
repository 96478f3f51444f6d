#pragma once

#include <functional>
#include <optional>
#include <string>

namespace fpcc {

using SpaceTimeField = std::function<double(double x, double t)>;
using SpaceField = std::function<double(double x)>;

/// Fokker-Planck problem in flux form
///
///     du/dt = d/dx F + g,   F = B u + C du/dx,   F = 0 on the boundary,
///
/// with B the advective and C the (positive) diffusive coefficient.
struct ProblemSpec {
    std::string name;
    SpaceTimeField advection;  ///< B(x, t)
    SpaceTimeField diffusion;  ///< C(x, t), must be > 0
    SpaceTimeField source;     ///< g(x, t)
    SpaceField initial;        ///< u0(x) >= 0
    std::optional<SpaceTimeField> exact;
    /// Unnormalized steady state, when known in closed form.
    std::optional<SpaceField> steady_state;
    double x_left = 0.0;
    double x_right = 1.0;
    double t_final = 1.0;
    /// B and C do not depend on t; lets time loops reuse assembled operators.
    bool time_independent_coefficients = false;

    /// Drift/noise form  du/dt - (sigma^2/2) u_xx + (f u)_x = g, i.e. B = -f
    /// and C = sigma^2/2.
    static ProblemSpec from_drift_diffusion(std::string name, SpaceTimeField drift, double sigma,
                                            double x_left, double x_right, double t_final);
};

}  // namespace fpcc
