#include "hypergm/quadrature.hpp"

#include <cmath>

#include "hypergm/errors.hpp"

namespace hypergm {

namespace {

constexpr double kHalfPi = 1.57079632679489661923;

// node at u = k*h: t, 1-t and the weight dt/du
struct Node {
    double t, mt, w;
};

bool node_at(double u, Node& n) {
    double s = kHalfPi * std::sinh(u);
    if (std::abs(s) > 350.0) return false;  // exp(2s) overflows; contribution is nil
    double e2 = std::exp(2.0 * s);
    n.t = e2 / (1.0 + e2);
    n.mt = 1.0 / (1.0 + e2);
    double ch = std::cosh(s);
    n.w = kHalfPi * std::cosh(u) / (2.0 * ch * ch);
    return n.t > 0.0 && n.mt > 0.0;
}

}  // namespace

QuadResult tanh_sinh_01(const std::function<std::complex<double>(double, double)>& f,
                        const QuadSpec& spec) {
    if (spec.levels < 3) throw InvalidArgument("tanh-sinh needs levels >= 3");
    if (spec.abs_tol <= 0.0 || spec.rel_tol <= 0.0)
        throw InvalidArgument("tolerances must be positive");

    QuadResult out;
    std::complex<double> prev(0.0, 0.0);
    for (int level = 0; level <= spec.levels; ++level) {
        double h = 1.0 / static_cast<double>(1 << level);
        std::complex<double> sum(0.0, 0.0);
        // center node
        Node n;
        if (node_at(0.0, n)) sum += n.w * f(n.t, n.mt);
        for (int side = -1; side <= 1; side += 2) {
            int dead = 0;
            for (long k = 1;; ++k) {
                double u = side * k * h;
                if (!node_at(u, n)) break;
                std::complex<double> term = n.w * f(n.t, n.mt);
                sum += term;
                if (std::abs(term) < 1e-18 * std::abs(sum)) {
                    if (++dead >= 4) break;
                } else {
                    dead = 0;
                }
                if (k > 4000000) break;
            }
        }
        std::complex<double> value = sum * h;
        if (level >= 2) {
            double delta = std::abs(value - prev);
            if (delta <= spec.abs_tol + spec.rel_tol * std::abs(value)) {
                out.value = value;
                out.err_estimate = delta;
                out.levels_used = level;
                return out;
            }
        }
        prev = value;
    }
    throw QuadratureNoConvergence("tanh-sinh did not settle within " +
                                  std::to_string(spec.levels) + " levels");
}

}  // namespace hypergm
