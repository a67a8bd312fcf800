#pragma once

#include <stdexcept>
#include <string>

namespace hypergm {

// Error taxonomy shared by the exact and numeric layers.  The CLI maps
// domain_error-derived types to exit code 2 and usage problems to 3.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define HYPERGM_ERROR(Name)                                        \
    struct Name : Error {                                          \
        explicit Name(const std::string& msg) : Error(msg) {}      \
    }

HYPERGM_ERROR(DivisionByZero);
HYPERGM_ERROR(PoleAtPoint);
HYPERGM_ERROR(NonlinearDenominator);
HYPERGM_ERROR(DegenerateConfiguration);
HYPERGM_ERROR(ResonantExponent);
HYPERGM_ERROR(ExponentSumViolation);
HYPERGM_ERROR(ForeignPole);
HYPERGM_ERROR(SingularBasis);
HYPERGM_ERROR(UnabsorbableFactor);
HYPERGM_ERROR(NotCyclic);
HYPERGM_ERROR(UnknownPair);
HYPERGM_ERROR(InvalidArgument);
HYPERGM_ERROR(PolePar);
HYPERGM_ERROR(OutsideDisk);
HYPERGM_ERROR(DivergentEndpoint);
HYPERGM_ERROR(QuadratureNoConvergence);
HYPERGM_ERROR(PathThroughSingularity);
HYPERGM_ERROR(StiffnessFailure);

#undef HYPERGM_ERROR

}  // namespace hypergm
