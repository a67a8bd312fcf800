#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypergm/oneform.hpp"

namespace hypergm {

/// A cohomology basis element: a one-form tagged with the pair of branch
/// points carrying its simple poles.
struct BasisForm {
    std::string p, q;  // branch point tags, e.g. "inf", "0", "1/z"
    OneForm form;
    std::string label() const { return p + q; }
};

/// Coordinates of a one-form in a chosen basis, with the exactness witness g
/// such that  eta - sum coords_i basis_i = nabla0(g).
struct CohomClass {
    std::vector<BasisForm> basis;
    std::vector<RatFuncZ> coords;
    RatFuncT witness;
};

/// nabla g = dg + (d log Phi) g for a rational 0-form g.
OneForm nabla0(const RatFuncT& g, const MasterFunction& m);

/// nabla_z phi = d/dz phi + (d/dz log Phi) phi, z the parameter of form `wrt`.
OneForm nabla_z(const OneForm& phi, const MasterFunction& m, int wrt = 3);

/// Reduces eta to the basis modulo nabla-exact forms: (i) pole orders >= 2
/// are lowered with nabla(l_j^{-(k-1)}), (ii) the polynomial tail is lowered
/// with nabla(t^k), (iii) the remaining simple-pole vector is matched against
/// the basis together with the single relation d log Phi == nabla(1).
CohomClass reduce(const OneForm& eta, const std::vector<BasisForm>& basis,
                  const MasterFunction& m);

struct ConnectionMatrix {
    Matrix<RatFuncZ> entries;  // row i: coords of nabla_z basis_i
    /// Simple-pole residue data A(z) = sum_s A_s / (z - s), present only when
    /// every entry decomposes with simple rational poles and no tail.
    std::optional<std::vector<std::pair<Rat, Matrix<Rat>>>> residues;
};

/// The connection matrix of the basis: nabla_z basis_i == sum_j A_ij basis_j.
ConnectionMatrix gauss_manin(const std::vector<BasisForm>& basis,
                             const MasterFunction& m, int wrt = 3);

struct ShiftRecord {
    bool applied = false;
    int form_index = -1;         // l_j absorbed into Phi
    MasterFunction master;       // shifted master (or the original)
    std::vector<BasisForm> basis;  // stripped basis (or the original)
};

/// Absorbs a common factor l_j^{-1} of all basis forms into Phi
/// (alpha_j -> alpha_j - 1) and strips the basis accordingly.  Absorbing
/// l_1 = t is rejected: dt is not a valid basis element.
ShiftRecord shift_exponents(const MasterFunction& m,
                            const std::vector<BasisForm>& basis);

/// The six Gauss-case basis one-forms, keyed by branch-point pair.
BasisForm gauss_form_inf0();      // dt/t
BasisForm gauss_form_01();        // dt/(t(1-t))
BasisForm gauss_form_1_1z();      // (z-1) dt/((1-t)(1-zt))
BasisForm gauss_form_1_1z_tilde();// z dt/((1-t)(1-zt))
BasisForm gauss_form_1inf();      // dt/(1-t)
BasisForm gauss_form_1z_inf();    // z dt/(1-zt)
BasisForm gauss_form_0_1z();      // dt/(t(1-zt))

/// Default basis for general n: consecutive ratios d log(l_{j+1}/l_j),
/// j = 0..n-2.
std::vector<BasisForm> default_basis(const MasterFunction& m);

}  // namespace hypergm
