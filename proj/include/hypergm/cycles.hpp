#pragma once

#include <array>
#include <string>
#include <vector>

#include "hypergm/fuchsian.hpp"
#include "hypergm/quadrature.hpp"
#include "hypergm/special_functions.hpp"

namespace hypergm {

enum class BranchTag { Zero, One, InvZ, Inf };

/// Unordered pair of branch points among {0, 1, 1/z, inf}; exactly six.
struct CycleId {
    BranchTag p, q;

    static CycleId parse(const std::string& s);  // "01", "1-1z", ...
    std::string name() const;
    bool operator==(const CycleId& o) const {
        return (p == o.p && q == o.q) || (p == o.q && q == o.p);
    }
};

std::vector<CycleId> all_cycles();

/// Integral of t^{a-1}(1-t)^{c-a-1}(1-zt)^{-b} dt over the cycle, branch
/// points really ordered 0 < 1 < 1/z < inf (z real in (0,1); z = 0 only for
/// the (0,1) cycle).  Branches: principal on (0,1); a factor that is negative
/// on a (sub)segment contributes the phase e^{-i pi (its exponent)};
/// composite cycles split at the intermediate branch point.
QuadResult euler_cycle_integral(double a, double b, double c, double z,
                                const CycleId& cycle, const QuadSpec& spec);

/// Integral over (0,1) of Phi times the tagged basis one-form; the seed data
/// for Fuchsian transport.
Cplx basis_seed_integral(PairTag tag, int component, double a, double b, double c,
                         double z, const QuadSpec& spec);

struct RelationReport {
    Cplx lhs, rhs;
    double abs_err = 0.0;
    std::string cycle;
    std::string note;  // variant / continuation-side findings
};

/// Checks relation k in 1..6 tying the cycle integrals to the local
/// solutions, with the beta-and-phase factors under the engine's fixed branch
/// convention.  For k = 4, 5, 6 the report notes the resolved variant
/// (corrected f4 parameters, the f5 cycle, the f6 phase/continuation side).
RelationReport relation_check(int k, double a, double b, double c, double z,
                              const QuadSpec& spec);

struct CovarianceReport {
    Cplx lhs, rhs;
    double abs_err = 0.0;
};

/// Numeric covariance of F(Z) = int prod l_j^{alpha_j} dt over the segment
/// joining the roots of l_1 and l_2:
///   F(gZ) = det(g)^{-1} F(Z)  and  F(Zh) = F(Z) prod h_j^{alpha_j}.
/// Returns the two checks in order.
std::array<CovarianceReport, 2> covariance_check(
    const std::array<std::array<double, 4>, 2>& config,
    const std::array<std::array<double, 2>, 2>& g,
    const std::array<double, 4>& h, const std::array<double, 4>& exponents,
    const QuadSpec& spec);

/// F(Z) itself (shared by the covariance checks and their tests).
Cplx config_integral(const std::array<std::array<double, 4>, 2>& config,
                     const std::array<double, 4>& exponents, const QuadSpec& spec);

}  // namespace hypergm
