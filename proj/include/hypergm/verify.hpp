#pragma once

#include <string>
#include <vector>

#include "hypergm/cycles.hpp"
#include "hypergm/transport.hpp"
#include "hypergm/weyl.hpp"

namespace hypergm {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string expected, actual;
    bool exact = false;     // exact comparison (abs_err meaningless)
    double abs_err = 0.0;
    std::string note;
};

struct SuiteResult {
    std::string name;
    std::vector<CheckResult> checks;
    int failures() const {
        int n = 0;
        for (const auto& c : checks) n += !c.pass;
        return n;
    }
    bool all_pass() const { return failures() == 0; }
};

struct VerifyOptions {
    int samples = 20;
    unsigned long long seed = 12345;
    QuadSpec quad{};
    SeriesSpec series{};
    OdeSpec ode{};
};

/// CLI suite set, in the stable order the `all` suite runs them.
std::vector<std::string> suite_names();

/// Runs one named suite (matrices | det | scalar | weyl | relations |
/// covariance | reduce-props).  Throws UnknownPair on an unknown name.
SuiteResult run_suite(const std::string& name, const VerifyOptions& opt);

SuiteResult verify_matrices(const VerifyOptions& opt);
SuiteResult verify_det(const VerifyOptions& opt);
SuiteResult verify_scalar(const VerifyOptions& opt);
SuiteResult verify_weyl(const VerifyOptions& opt);
SuiteResult verify_relations(const VerifyOptions& opt);
SuiteResult verify_covariance(const VerifyOptions& opt);
SuiteResult verify_reduce_props(const VerifyOptions& opt);

/// Method-agreement grid (series vs Euler integral over (0,1)).
SuiteResult verify_series_integral_grid(const VerifyOptions& opt, double tol = 1e-10);
/// Quadrature-seeded transport of each of the six systems.
SuiteResult verify_transport(const VerifyOptions& opt, double tol = 1e-6);
/// Rank of the reduced simple-pole span for n = 3, 4, 5.
SuiteResult verify_dimension(const VerifyOptions& opt);

/// Deterministic non-resonant parameter sampler: numerators drawn mod prime
/// denominators 7, 11, 13, so no integer linear combination of a, b, c with
/// small coefficients can be an integer.
struct ParamSampler {
    explicit ParamSampler(unsigned long long seed) : state(seed) {}
    Rat next(long den);
    struct Gauss {
        Rat a, b, c;
    };
    Gauss next_abc();
    unsigned long long raw();

  private:
    unsigned long long state;
};

}  // namespace hypergm
