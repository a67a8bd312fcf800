#pragma once

#include <array>
#include <string>
#include <vector>

#include "hypergm/cohomology.hpp"

namespace hypergm {

/// The six basis pairs (phi_01, phi_pq) of the n = 3 engine.
enum class PairTag { Inf0, One1z, One1zTilde, OneInf, InvZInf, Zero1z };

PairTag parse_pair_tag(const std::string& s);  // throws UnknownPair
std::string pair_tag_name(PairTag t);
std::vector<PairTag> all_pair_tags();

/// Basis (phi_01, phi_pq) for a tag.
std::vector<BasisForm> basis_for(PairTag t);

/// f' = (sum_s A_s/(z - s)) f with exact rational residue matrices.
struct FuchsianSystem {
    int size = 2;
    std::vector<Rat> singular_points;
    std::vector<Matrix<Rat>> residues;
    std::vector<std::string> basis_labels;

    Matrix<RatFuncZ> matrix_of_z() const;
};

/// Closed-form connection catalog for the six pairs, evaluated at exact
/// (a, b, c); the golden oracle cross-checking gauss_manin.
FuchsianSystem reference_system(PairTag tag, const Rat& a, const Rat& b, const Rat& c);

/// Assembles a FuchsianSystem from a residue-decomposable connection matrix.
FuchsianSystem assemble_system(const ConnectionMatrix& conn,
                               const std::vector<std::string>& labels);

/// f'' + p f' + q f = 0.
struct ScalarODE2 {
    RatFuncZ p, q;
    friend bool operator==(const ScalarODE2& x, const ScalarODE2& y) {
        return x.p == y.p && x.q == y.q;
    }
};

/// Cyclic-vector elimination of a 2x2 first-order system down to the scalar
/// second-order equation for the chosen component.
ScalarODE2 to_scalar(const FuchsianSystem& sys, int component);

/// det A(z) as an exact rational function.
RatFuncZ det_connection(const FuchsianSystem& sys);

/// The scalar operator with p = c/z + (a+b+1-c)/(z-1), q = ab/(z(z-1)).
ScalarODE2 gauss_operator(const Rat& a, const Rat& b, const Rat& c);

}  // namespace hypergm
