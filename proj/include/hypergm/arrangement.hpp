#pragma once

#include <string>
#include <vector>

#include "hypergm/linalg.hpp"
#include "hypergm/ratfunc.hpp"

namespace hypergm {

/// Linear form p + q*t with coefficients in Q(z).
struct LinearForm {
    RatFuncZ constant;  // p
    RatFuncZ slope;     // q

    RatFuncT as_poly_t() const {
        return RatFuncT(PolyT(std::vector<RatFuncZ>{constant, slope}));
    }
    bool is_constant() const { return slope.is_zero(); }
    /// Root in the t-plane (requires slope != 0).
    RatFuncZ root() const { return -constant / slope; }
};

/// Canonical point configuration on CP^1: columns (1,0), (0,1), (1,-1),
/// (1,-z_3), ..., (1,-z_n).  Entries of `params` are the z_j as elements of
/// Q(z); the symbolic slot holds the variable z itself.
struct ConfigZ {
    int n = 3;
    std::vector<RatFuncZ> params;  // z_3 .. z_n

    /// n = 3 with the single symbolic parameter z.
    static ConfigZ gauss();
    /// General n; slot `symbolic_index` (3-based) carries the symbol z, the
    /// others take the supplied rational values in order.
    static ConfigZ canonical(int n, int symbolic_index, const std::vector<Rat>& fixed);
    /// Fully rational configuration (no symbolic slot).
    static ConfigZ numeric(const std::vector<Rat>& zs);

    /// The n+1 linear forms l_0 = 1, l_1 = t, l_2 = 1-t, l_j = 1 - z_j t.
    std::vector<LinearForm> forms() const;
};

/// GL(2) left action plus column scaling brings a general-position matrix to
/// the canonical form; returns the z_j.  Vanishing minors are rejected.
ConfigZ normalize_z_matrix(const Matrix<Rat>& raw);

/// The cross-ratio that the normalization must reproduce for column j
/// (independent oracle: minor combination d_{0j} d_{12} / (d_{02} d_{1j})).
Rat column_cross_ratio(const Matrix<Rat>& raw, int j);

enum class MasterMode { Projective, NonProjected };

/// The arrangement together with its exponents: Phi = prod l_j^{alpha_j}.
struct MasterFunction {
    std::vector<LinearForm> lforms;  // l_0 .. l_n
    std::vector<Rat> exponents;      // alpha_0 .. alpha_n
    MasterMode mode = MasterMode::NonProjected;

    int n() const { return static_cast<int>(lforms.size()) - 1; }
    /// Sum over the non-constant forms (enters degree reduction at infinity).
    Rat exponent_sum_finite() const;

    /// Unvalidated constructor for tests and internal rewrites.
    static MasterFunction unchecked(std::vector<LinearForm> forms,
                                    std::vector<Rat> exps, MasterMode mode);

    /// The Gauss instance Phi = t^a (1-t)^{c-a} (1-zt)^{-b}.
    static MasterFunction gauss(const Rat& a, const Rat& b, const Rat& c);
};

/// Validates exponents (non-resonance, projective sum) and builds Phi.
/// In NonProjected mode pass n exponents (alpha_1..alpha_n); alpha_0 is kept
/// as -2 - sum for bookkeeping and stays inert.  In Projective mode pass all
/// n+1 exponents; each must be non-integer and they must sum to -2.
MasterFunction build_master(const ConfigZ& config, const std::vector<Rat>& exps,
                            MasterMode mode);

struct BranchPoint {
    std::string tag;        // "0", "1", "1/z3", ..., "inf"
    bool at_infinity = false;
    RatFuncZ location;      // meaningful when !at_infinity
};

/// Branch points 0, 1, 1/z_j, infinity; locations pairwise distinct.
std::vector<BranchPoint> branch_points(const MasterFunction& m);

}  // namespace hypergm
