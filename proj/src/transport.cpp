#include "hypergm/transport.hpp"

#include <cmath>

namespace hypergm {

namespace {

using CVec = std::vector<std::complex<double>>;

double segment_distance(std::complex<double> p, std::complex<double> a,
                        std::complex<double> b) {
    std::complex<double> ab = b - a;
    double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    double s = ((p - a).real() * ab.real() + (p - a).imag() * ab.imag()) / len2;
    s = std::clamp(s, 0.0, 1.0);
    return std::abs(p - (a + s * ab));
}

// Dormand-Prince 5(4) tableau
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 5179.0 / 57600, e3 = 7571.0 / 16695, e4 = 393.0 / 640,
                 e5 = -92097.0 / 339200, e6 = 187.0 / 2100, e7 = 1.0 / 40;

}  // namespace

std::vector<std::complex<double>> ode_solve_path(const FuchsianSystem& sys,
                                                 const PathPlan& path,
                                                 const CVec& initial,
                                                 const OdeSpec& spec) {
    if (path.waypoints.empty()) throw InvalidArgument("empty path");
    if (static_cast<int>(initial.size()) != sys.size)
        throw InvalidArgument("initial vector size mismatch");

    std::vector<std::complex<double>> sing;
    for (const Rat& s : sys.singular_points) sing.push_back({s.to_double(), 0.0});

    for (std::size_t i = 0; i + 1 < path.waypoints.size(); ++i)
        for (const auto& s : sing)
            if (segment_distance(s, path.waypoints[i], path.waypoints[i + 1]) <
                path.min_clearance)
                throw PathThroughSingularity("path passes within clearance of z = " +
                                             std::to_string(s.real()));
    for (const auto& w : path.waypoints)
        for (const auto& s : sing)
            if (std::abs(w - s) < path.min_clearance)
                throw PathThroughSingularity("waypoint too close to z = " +
                                             std::to_string(s.real()));

    // numeric residue matrices
    int n = sys.size;
    std::vector<std::vector<std::complex<double>>> res(sys.residues.size());
    for (std::size_t k = 0; k < sys.residues.size(); ++k) {
        res[k].resize(n * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                res[k][i * n + j] = {sys.residues[k](i, j).to_double(), 0.0};
    }

    CVec y = initial;
    for (std::size_t seg = 0; seg + 1 < path.waypoints.size(); ++seg) {
        std::complex<double> z0 = path.waypoints[seg];
        std::complex<double> dz = path.waypoints[seg + 1] - z0;
        if (dz == std::complex<double>(0.0, 0.0)) continue;

        auto rhs = [&](double s, const CVec& f) {
            std::complex<double> z = z0 + s * dz;
            CVec out(n, {0.0, 0.0});
            for (std::size_t k = 0; k < res.size(); ++k) {
                std::complex<double> w = dz / (z - sing[k]);
                for (int i = 0; i < n; ++i) {
                    std::complex<double> acc(0.0, 0.0);
                    for (int j = 0; j < n; ++j) acc += res[k][i * n + j] * f[j];
                    out[i] += w * acc;
                }
            }
            return out;
        };

        double s = 0.0, h = spec.initial_step;
        while (s < 1.0) {
            h = std::min(h, 1.0 - s);
            CVec k1 = rhs(s, y);
            auto at = [&](double frac, const std::vector<std::pair<double, const CVec*>>& terms) {
                CVec v = y;
                for (const auto& [coef, kv] : terms)
                    for (int i = 0; i < n; ++i) v[i] += h * coef * (*kv)[i];
                return rhs(s + frac * h, v);
            };
            CVec k2 = at(c2, {{a21, &k1}});
            CVec k3 = at(c3, {{a31, &k1}, {a32, &k2}});
            CVec k4 = at(c4, {{a41, &k1}, {a42, &k2}, {a43, &k3}});
            CVec k5 = at(c5, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}});
            CVec k6 = at(1.0, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}});
            CVec y5(n), k7(n);
            for (int i = 0; i < n; ++i)
                y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] +
                                    b5 * k5[i] + b6 * k6[i]);
            k7 = rhs(s + h, y5);
            double err = 0.0;
            for (int i = 0; i < n; ++i) {
                std::complex<double> y4 = y[i] + h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                                                      e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
                double scale = spec.abs_tol +
                               spec.rel_tol * std::max(std::abs(y[i]), std::abs(y5[i]));
                err = std::max(err, std::abs(y5[i] - y4) / scale);
            }
            if (err <= 1.0) {
                s += h;
                y = std::move(y5);
            }
            double factor = (err > 0.0) ? 0.9 * std::pow(err, -0.2) : 5.0;
            h *= std::clamp(factor, 0.2, 5.0);
            if (h < spec.min_step)
                throw StiffnessFailure("step size underflow at s = " + std::to_string(s));
        }
    }
    return y;
}

}  // namespace hypergm
