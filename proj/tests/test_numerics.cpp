#include "doctest.h"

#include <cmath>

#include "hypergm/verify.hpp"

using namespace hypergm;

namespace {

constexpr double kPi = 3.14159265358979323846;

double rel_err(Cplx got, Cplx want) {
    return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

// independently computed anchors (30-digit arithmetic, truncated)
const double kF_2_5 = 1.04679621877657576;        // F(1/3,1/5,5/7; 2/5)
const double kBeta_a_ca = 4.89649953200348986;    // B(1/3, 5/7-1/3)
const Cplx kF5(1.20442701217017162, 0.862014802287562742);   // f5, +i0 side
const Cplx kF6(1.16697101911640601, -0.46641735244385078);   // f6, -i0 side
const Cplx kI01(5.12563719533122825, 0.0);
const Cplx kI1_1z(-1.12402686456645523, 2.86397374291703348);
const Cplx kI1zInf(-1.71540823483256917, 1.09584444362711383);
const Cplx kIinf0(-2.28620209593234657, 3.95981818652528076);

}  // namespace

TEST_CASE("pochhammer basics") {
    CHECK(pochhammer(Cplx(0.37, 0.0), 0) == Cplx(1.0, 0.0));
    CHECK(pochhammer(Cplx(2, 0), 3) == Cplx(24, 0));  // 2*3*4
    // (1)_n = n!
    double fact = 1;
    for (int n = 1; n <= 8; ++n) {
        fact *= n;
        CHECK(pochhammer(Cplx(1, 0), n).real() == doctest::Approx(fact));
    }
    CHECK_THROWS_AS(pochhammer(Cplx(1, 0), -1), InvalidArgument);
}

TEST_CASE("gamma and beta values") {
    CHECK(rel_err(gamma_fn(Cplx(0.5, 0)), Cplx(std::sqrt(kPi), 0)) < 1e-14);
    CHECK(rel_err(gamma_fn(Cplx(1.0 / 3, 0)), Cplx(2.67893853470774763, 0)) < 1e-14);
    CHECK(rel_err(beta_fn(Cplx(1, 0), Cplx(1, 0)), Cplx(1, 0)) < 1e-14);
    // B(2,3) = int_0^1 t (1-t)^2 dt = 1/12
    CHECK(rel_err(beta_fn(Cplx(2, 0), Cplx(3, 0)), Cplx(1.0 / 12, 0)) < 1e-14);
    CHECK_THROWS_AS(gamma_ln(Cplx(-3, 0)), PolePar);
}

TEST_CASE("series evaluation with its oracles") {
    SeriesSpec spec;
    // F(a,b,c;0) = 1
    CHECK(hyp2f1_series(Cplx(0.3, 0), Cplx(0.7, 0), Cplx(1.1, 0), Cplx(0, 0), spec).value ==
          Cplx(1, 0));
    // logarithm oracle: F(1,1,2;z) = -log(1-z)/z
    for (double z : {0.1, 0.3, 0.5}) {
        Cplx got = hyp2f1_series(Cplx(1, 0), Cplx(1, 0), Cplx(2, 0), Cplx(z, 0), spec).value;
        CHECK(rel_err(got, Cplx(-std::log1p(-z) / z, 0)) < 1e-14);
    }
    // binomial oracle: F(a,b,b;z) = (1-z)^{-a}
    Cplx got = hyp2f1_series(Cplx(0.5, 0), Cplx(0.9, 0), Cplx(0.9, 0), Cplx(0.25, 0), spec).value;
    CHECK(rel_err(got, Cplx(std::pow(0.75, -0.5), 0)) < 1e-14);
    // frozen anchor
    CHECK(rel_err(hyp2f1_series(Cplx(1.0 / 3, 0), Cplx(0.2, 0), Cplx(5.0 / 7, 0),
                                Cplx(0.4, 0), spec)
                      .value,
                  Cplx(kF_2_5, 0)) < 5e-15);
    CHECK_THROWS_AS(hyp2f1_series(Cplx(1, 0), Cplx(1, 0), Cplx(-2, 0), Cplx(0.1, 0), spec),
                    PolePar);
    CHECK_THROWS_AS(hyp2f1_series(Cplx(1, 0), Cplx(1, 0), Cplx(2, 0), Cplx(0.99, 0), spec),
                    OutsideDisk);
}

TEST_CASE("continuation onto the cut agrees with the anchors") {
    double a = 1.0 / 3, b = 0.2, c = 5.0 / 7, z = 0.4;
    Cplx f5 = kummer_local(5, Cplx(a, 0), Cplx(b, 0), Cplx(c, 0), z, {});
    CHECK(rel_err(f5, kF5) < 1e-13);
    KummerOptions below;
    below.cut = CutSide::Below;
    Cplx f6 = kummer_local(6, Cplx(a, 0), Cplx(b, 0), Cplx(c, 0), z, below);
    CHECK(rel_err(f6, kF6) < 1e-13);
    // opposite sides conjugate each other for real parameters
    KummerOptions above;
    above.cut = CutSide::Above;
    Cplx f6u = kummer_local(6, Cplx(a, 0), Cplx(b, 0), Cplx(c, 0), z, above);
    CHECK(rel_err(std::conj(f6u), f6) < 1e-13);
}

TEST_CASE("kummer locals near their anchor points") {
    SeriesSpec spec;
    double a = 1.0 / 3, b = 0.2, c = 5.0 / 7;
    KummerOptions ko;
    // f2 z^{c-1} -> F(a-c+1, b-c+1, 2-c; z), which is 1 at z -> 0
    double z = 1e-8;
    Cplx v = kummer_local(2, Cplx(a, 0), Cplx(b, 0), Cplx(c, 0), z, ko) *
             std::pow(Cplx(z, 0), Cplx(c - 1, 0));
    CHECK(rel_err(v, Cplx(1, 0)) < 1e-6);
    CHECK(kummer_local(1, Cplx(a, 0), Cplx(b, 0), Cplx(c, 0), 0.4, ko) ==
          hyp2f1_series(Cplx(a, 0), Cplx(b, 0), Cplx(c, 0), Cplx(0.4, 0), spec).value);
}

TEST_CASE("tanh-sinh handles endpoint singularities") {
    QuadSpec spec;
    // int_0^1 t^{-1/2} dt = 2
    auto r1 = tanh_sinh_01([](double t, double) { return Cplx(1.0 / std::sqrt(t), 0); }, spec);
    CHECK(rel_err(r1.value, Cplx(2, 0)) < 1e-12);
    // a beta integral with both endpoints singular
    auto r2 = tanh_sinh_01(
        [](double t, double mt) { return Cplx(std::pow(t, -0.25) * std::pow(mt, -0.5), 0); },
        spec);
    CHECK(rel_err(r2.value, beta_fn(Cplx(0.75, 0), Cplx(0.5, 0))) < 1e-12);
    QuadSpec bad;
    bad.levels = 2;
    CHECK_THROWS_AS(tanh_sinh_01([](double, double) { return Cplx(1, 0); }, bad),
                    InvalidArgument);
}

TEST_CASE("cycle integrals against the frozen anchors") {
    QuadSpec spec;
    double a = 1.0 / 3, b = 0.2, c = 5.0 / 7, z = 0.4;
    CHECK(rel_err(euler_cycle_integral(a, b, c, z, CycleId::parse("01"), spec).value, kI01) < 5e-12);
    CHECK(rel_err(euler_cycle_integral(a, b, c, z, CycleId::parse("1-1z"), spec).value, kI1_1z) < 5e-12);
    CHECK(rel_err(euler_cycle_integral(a, b, c, z, CycleId::parse("1z-inf"), spec).value, kI1zInf) < 5e-12);
    CHECK(rel_err(euler_cycle_integral(a, b, c, z, CycleId::parse("inf0"), spec).value, kIinf0) < 5e-12);
    // composite cycles are sums of their pieces
    CHECK(rel_err(euler_cycle_integral(a, b, c, z, CycleId::parse("1inf"), spec).value,
                  kI1_1z + kI1zInf) < 5e-12);
    CHECK(rel_err(euler_cycle_integral(a, b, c, z, CycleId::parse("0-1z"), spec).value,
                  kI01 + kI1_1z) < 5e-12);
}

TEST_CASE("the (0,1) cycle at z = 0 is the beta integrand") {
    QuadSpec spec;
    double a = 1.0 / 3, c = 5.0 / 7;
    Cplx v = euler_cycle_integral(a, 0.2, c, 0.0, CycleId::parse("01"), spec).value;
    CHECK(rel_err(v, beta_fn(Cplx(a, 0), Cplx(c - a, 0))) < 1e-12);
    CHECK(rel_err(Cplx(kBeta_a_ca, 0), beta_fn(Cplx(a, 0), Cplx(c - a, 0))) < 1e-14);
}

TEST_CASE("divergent endpoints are rejected") {
    QuadSpec spec;
    // b >= 1 breaks integrability at t = 1/z
    CHECK_THROWS_AS(euler_cycle_integral(0.3, 1.2, 0.7, 0.4, CycleId::parse("1-1z"), spec),
                    DivergentEndpoint);
    // b - c + 1 <= 0 breaks the infinity endpoint
    CHECK_THROWS_AS(euler_cycle_integral(0.3, 0.2, 1.7, 0.4, CycleId::parse("1z-inf"), spec),
                    DivergentEndpoint);
}

TEST_CASE("quadrature stability under tighter tolerances") {
    QuadSpec base;
    base.rel_tol = 1e-11;
    base.abs_tol = 1e-12;
    QuadSpec fine = base;
    fine.rel_tol = 1e-14;
    fine.abs_tol = 1e-15;
    double a = 1.0 / 3, b = 0.2, c = 5.0 / 7, z = 0.4;
    for (const char* cyc : {"01", "1-1z", "inf0"}) {
        Cplx v1 = euler_cycle_integral(a, b, c, z, CycleId::parse(cyc), base).value;
        Cplx v2 = euler_cycle_integral(a, b, c, z, CycleId::parse(cyc), fine).value;
        CHECK(std::abs(v1 - v2) < 10 * base.rel_tol * std::abs(v2));
    }
}

TEST_CASE("all six cycle relations hold") {
    QuadSpec spec;
    double a = 1.0 / 3, b = 0.2, c = 5.0 / 7;
    for (double z : {0.3, 0.4, 0.5}) {
        for (int k = 1; k <= 6; ++k) {
            RelationReport rep = relation_check(k, a, b, c, z, spec);
            CAPTURE(k);
            CAPTURE(z);
            CHECK(rep.abs_err / std::abs(rep.rhs) < 1e-10);
        }
    }
}

TEST_CASE("transport: trivial and failure paths") {
    FuchsianSystem sys = reference_system(PairTag::One1zTilde, Rat(1, 3), Rat(1, 5), Rat(5, 7));
    std::vector<Cplx> init{Cplx(1.0, 0.0), Cplx(0.5, 0.0)};
    // single waypoint: nothing happens
    PathPlan still{{Cplx(0.3, 0)}, 1e-3};
    CHECK(ode_solve_path(sys, still, init) == init);
    // a path through z = 1 is rejected
    PathPlan bad{{Cplx(0.5, 0), Cplx(1.0, 0), Cplx(1.5, 0)}, 1e-3};
    CHECK_THROWS_AS(ode_solve_path(sys, bad, init), PathThroughSingularity);
}

TEST_CASE("transport matches the series along the real segment") {
    QuadSpec spec;
    OdeSpec ode;
    double a = 1.0 / 3, b = 0.2, c = 5.0 / 7;
    Rat ra(1, 3), rb(1, 5), rc(5, 7);
    MasterFunction m = MasterFunction::gauss(ra, rb, rc);
    FuchsianSystem sys =
        assemble_system(gauss_manin(basis_for(PairTag::One1zTilde), m), {"01", "~"});
    std::vector<Cplx> init{
        basis_seed_integral(PairTag::One1zTilde, 0, a, b, c, 0.1, spec),
        basis_seed_integral(PairTag::One1zTilde, 1, a, b, c, 0.1, spec)};
    PathPlan path{{Cplx(0.1, 0), Cplx(0.5, 0)}, 1e-2};
    std::vector<Cplx> y = ode_solve_path(sys, path, init, ode);
    Cplx expect = beta_fn(Cplx(a, 0), Cplx(c - a, 0)) *
                  hyp2f1_series(Cplx(a, 0), Cplx(b, 0), Cplx(c, 0), Cplx(0.5, 0), {}).value;
    CHECK(rel_err(y[0], expect) < 1e-9);
    // the second component tracks (z/b) dF/dz for this pair
    Cplx expect2 = beta_fn(Cplx(a, 0), Cplx(c - a, 0)) * Cplx(0.5 / b, 0) *
                   Cplx(a * b / c, 0) *
                   hyp2f1_series(Cplx(a + 1, 0), Cplx(b + 1, 0), Cplx(c + 1, 0),
                                 Cplx(0.5, 0), {})
                       .value;
    CHECK(rel_err(y[1], expect2) < 1e-9);
}

TEST_CASE("covariance under the unit shear and the column scaling") {
    QuadSpec spec;
    std::array<std::array<double, 4>, 2> zm{{{1, 0, 1, 1}, {0, 1, -1, -0.5}}};
    std::array<double, 4> al{-73.0 / 60, -1.0 / 3, -0.25, -0.2};
    std::array<std::array<double, 2>, 2> g{{{1, 0.1}, {0, 1}}};
    std::array<double, 4> h{1, 1, 1, 1.5};
    auto reports = covariance_check(zm, g, h, al, spec);
    CHECK(reports[0].abs_err / std::abs(reports[0].rhs) < 1e-10);
    CHECK(reports[1].abs_err / std::abs(reports[1].rhs) < 1e-10);
    // frozen anchor for the base configuration integral
    CHECK(rel_err(config_integral(zm, al, spec), Cplx(1.98613616099958949, 0)) < 1e-12);
}

TEST_CASE("verify suites run green end to end") {
    VerifyOptions opt;
    opt.samples = 3;
    CHECK(verify_matrices(opt).all_pass());
    CHECK(verify_det(opt).all_pass());
    CHECK(verify_scalar(opt).all_pass());
    CHECK(verify_weyl(opt).all_pass());
    CHECK(verify_covariance(opt).all_pass());
    opt.samples = 10;
    CHECK(verify_reduce_props(opt).all_pass());
}
