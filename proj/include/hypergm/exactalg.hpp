#pragma once

#include <vector>

#include "hypergm/ratfunc.hpp"

namespace hypergm {

struct ResidueTerm {
    Rat pole;
    int order = 1;
    Rat coeff;  // coefficient of 1/(z - pole)^order
};

struct ResidueDecomposition {
    PolyZ poly_part;
    std::vector<ResidueTerm> terms;  // sorted by (pole, order)

    RatFuncZ recombine() const;
};

/// Exact partial fractions over Q.  The denominator must factor into linear
/// rational factors; otherwise NonlinearDenominator is raised.  Known pole
/// locations may be passed as hints to skip the root search.
ResidueDecomposition residue_decompose(const RatFuncZ& f,
                                       const std::vector<Rat>& pole_hints = {});

/// All rational roots of p (with multiplicity stripped off one at a time);
/// returns the roots found and the unfactored remainder.
struct RootSplit {
    std::vector<Rat> roots;  // with multiplicity
    PolyZ remainder;         // monic, no rational roots (constant on success)
};
RootSplit rational_roots(const PolyZ& p);

}  // namespace hypergm
