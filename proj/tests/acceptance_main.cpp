// Acceptance suite: one line per criterion, exit 0 iff everything holds.
#include <chrono>
#include <cmath>
#include <cstdio>

#include "hypergm/verify.hpp"

using namespace hypergm;

namespace {

int g_failures = 0;

void report(int idx, const char* name, bool pass, const std::string& detail,
            double seconds) {
    std::printf("%s  %2d  %-24s %s (%.2fs)\n", pass ? "PASS" : "FAIL", idx, name,
                detail.c_str(), seconds);
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

template <typename F>
void criterion(int idx, const char* name, F body) {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
        detail = body(pass);
    } catch (const std::exception& e) {
        pass = false;
        detail = std::string("exception: ") + e.what();
    }
    double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(idx, name, pass, detail, dt);
}

std::string suite_detail(const SuiteResult& r, bool& pass) {
    pass = r.all_pass();
    std::string out = std::to_string(r.checks.size()) + " checks";
    if (!pass) {
        out += ", " + std::to_string(r.failures()) + " failed; first: ";
        for (const auto& c : r.checks)
            if (!c.pass) {
                out += c.name;
                break;
            }
    }
    return out;
}

}  // namespace

int main() {
    VerifyOptions opt;
    opt.samples = 20;
    opt.seed = 20240814;

    criterion(1, "matrix-derivation", [&](bool& pass) {
        // six pairs, 20 seeded non-resonant samples, exact equality
        return suite_detail(verify_matrices(opt), pass);
    });

    criterion(2, "determinant-identity", [&](bool& pass) {
        return suite_detail(verify_det(opt), pass);
    });

    criterion(3, "scalar-elimination", [&](bool& pass) {
        return suite_detail(verify_scalar(opt), pass);
    });

    criterion(4, "defining-equation", [&](bool& pass) {
        return suite_detail(verify_weyl(opt), pass);
    });

    criterion(5, "exactness-suite", [&](bool& pass) {
        VerifyOptions o = opt;
        o.samples = 100;  // pole orders <= 3 inside the generator
        SuiteResult r = verify_reduce_props(o);
        return suite_detail(r, pass);
    });

    criterion(6, "series-integral-grid", [&](bool& pass) {
        // |euler/B - series|/|series| < 1e-10 over the 72-point grid
        return suite_detail(verify_series_integral_grid(opt, 1e-10), pass);
    });

    criterion(7, "cycle-relations", [&](bool& pass) {
        // relation 1 to 1e-8; 2, 3, 6 to 1e-6 with phases; 4, 5 as a
        // unique-match property over the variants, inside verify_relations
        return suite_detail(verify_relations(opt), pass);
    });

    criterion(8, "ode-transport", [&](bool& pass) {
        return suite_detail(verify_transport(opt, 1e-6), pass);
    });

    criterion(9, "covariance", [&](bool& pass) {
        return suite_detail(verify_covariance(opt), pass);
    });

    criterion(10, "dimension-property", [&](bool& pass) {
        return suite_detail(verify_dimension(opt), pass);
    });

    if (g_failures) {
        std::printf("ACCEPTANCE: %d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("ACCEPTANCE: all criteria passed\n");
    return 0;
}
