#pragma once

#include <complex>
#include <vector>

#include "hypergm/fuchsian.hpp"

namespace hypergm {

/// Piecewise-linear path in the complex z plane with a guaranteed clearance
/// from the singular points.
struct PathPlan {
    std::vector<std::complex<double>> waypoints;
    double min_clearance = 1e-3;
};

struct OdeSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    double initial_step = 1e-3;
    double min_step = 1e-14;
};

/// Transports f' = A(z) f along the polyline with an embedded Runge-Kutta
/// 5(4) pair and proportional step control.
std::vector<std::complex<double>> ode_solve_path(
    const FuchsianSystem& sys, const PathPlan& path,
    const std::vector<std::complex<double>>& initial, const OdeSpec& spec = {});

}  // namespace hypergm
