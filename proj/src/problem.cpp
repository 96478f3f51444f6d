#include "fpcc/problem.hpp"

#include <utility>

namespace fpcc {

ProblemSpec ProblemSpec::from_drift_diffusion(std::string name, SpaceTimeField drift,
                                              double sigma, double x_left, double x_right,
                                              double t_final) {
    ProblemSpec p;
    p.name = std::move(name);
    p.advection = [f = std::move(drift)](double x, double t) { return -f(x, t); };
    const double c = 0.5 * sigma * sigma;
    p.diffusion = [c](double, double) { return c; };
    p.source = [](double, double) { return 0.0; };
    p.initial = [](double) { return 1.0; };
    p.x_left = x_left;
    p.x_right = x_right;
    p.t_final = t_final;
    return p;
}

}  // namespace fpcc
