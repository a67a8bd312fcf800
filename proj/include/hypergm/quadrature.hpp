#pragma once

#include <complex>
#include <functional>

namespace hypergm {

/// Tanh-sinh control: level halving depth and stopping tolerances.
struct QuadSpec {
    int levels = 10;        // >= 3
    double abs_tol = 1e-13;
    double rel_tol = 1e-12;
};

struct QuadResult {
    std::complex<double> value;
    double err_estimate = 0.0;
    int levels_used = 0;
};

/// Tanh-sinh quadrature of f over (0,1).  The integrand receives both t and
/// 1-t so endpoint-singular factors can be evaluated without cancellation.
QuadResult tanh_sinh_01(const std::function<std::complex<double>(double, double)>& f,
                        const QuadSpec& spec);

}  // namespace hypergm
