#include "doctest.h"

#include "hypergm/verify.hpp"

using namespace hypergm;

namespace {

const Rat kA(1, 3), kB(1, 5), kC(5, 7);

Rat r(long n, long d = 1) { return Rat(n, d); }

}  // namespace

TEST_CASE("catalog: the inf0 residue pair") {
    FuchsianSystem sys = reference_system(PairTag::Inf0, kA, kB, kC);
    // A_0 = [[0,0],[c-a,-c]], A_1 = [[c-a-b, b-c],[0,0]]
    CHECK(sys.residues[0](1, 0) == kC - kA);
    CHECK(sys.residues[0](1, 1) == -kC);
    CHECK(sys.residues[1](0, 0) == kC - kA - kB);
    CHECK(sys.residues[1](0, 1) == kB - kC);
    CHECK(sys.residues[1](1, 0).is_zero());
}

TEST_CASE("catalog: the rescaled pair carries the shifted entries") {
    FuchsianSystem sys = reference_system(PairTag::One1zTilde, kA, kB, kC);
    // A_0 = [[0,b],[0,1-c]], A_1 = [[0,0],[-a, c-a-b-1]]
    CHECK(sys.residues[0](0, 1) == kB);
    CHECK(sys.residues[0](1, 1) == r(1) - kC);
    CHECK(sys.residues[1](1, 0) == -kA);
    CHECK(sys.residues[1](1, 1) == kC - kA - kB - r(1));
}

TEST_CASE("catalog: the (0,1/z) pair follows the derivation") {
    FuchsianSystem sys = reference_system(PairTag::Zero1z, kA, kB, kC);
    CHECK(sys.residues[0](1, 0) == kC - kA);
    CHECK(sys.residues[0](1, 1) == -kC);
    CHECK(sys.residues[1](0, 0) == -kB);
    CHECK(sys.residues[1](0, 1) == kB);
    CHECK(sys.residues[1](1, 0) == kA - kC);
    CHECK(sys.residues[1](1, 1) == kC - kA);
}

TEST_CASE("unknown pair tags are rejected") {
    CHECK_THROWS_AS(parse_pair_tag("bogus"), UnknownPair);
    CHECK(parse_pair_tag("inf0") == PairTag::Inf0);
    CHECK(parse_pair_tag("tilde-1-1z") == PairTag::One1zTilde);
}

TEST_CASE("derived connection equals the catalog for every pair") {
    ParamSampler ps(99);
    for (int s = 0; s < 5; ++s) {
        auto [a, b, c] = ps.next_abc();
        MasterFunction m = MasterFunction::gauss(a, b, c);
        for (PairTag tag : all_pair_tags()) {
            ConnectionMatrix gm = gauss_manin(basis_for(tag), m);
            CHECK(gm.entries == reference_system(tag, a, b, c).matrix_of_z());
        }
    }
}

TEST_CASE("determinant identity ab/(z(z-1)) for all pairs") {
    RatFuncZ z = RatFuncZ::var();
    RatFuncZ target = RatFuncZ(kA * kB) / (z * (z - RatFuncZ(r(1))));
    for (PairTag tag : all_pair_tags()) {
        FuchsianSystem sys = reference_system(tag, kA, kB, kC);
        CHECK(det_connection(sys) == target);
    }
    FuchsianSystem zero;
    zero.size = 2;
    zero.singular_points = {r(0)};
    zero.residues = {Matrix<Rat>(2, 2)};
    CHECK(det_connection(zero).is_zero());
}

TEST_CASE("trace bookkeeping: tr A_0 + tr A_1 = -a-b for every pair") {
    ParamSampler ps(5);
    for (int s = 0; s < 5; ++s) {
        auto [a, b, c] = ps.next_abc();
        for (PairTag tag : all_pair_tags()) {
            FuchsianSystem sys = reference_system(tag, a, b, c);
            Rat tr(0);
            for (const auto& res : sys.residues)
                for (int i = 0; i < 2; ++i) tr += res(i, i);
            CHECK(tr == -a - b);
        }
    }
}

TEST_CASE("scalar elimination reproduces the hypergeometric operator") {
    ScalarODE2 target = gauss_operator(kA, kB, kC);
    for (PairTag tag : all_pair_tags()) {
        FuchsianSystem sys = reference_system(tag, kA, kB, kC);
        CHECK(to_scalar(sys, 0) == target);
    }
}

TEST_CASE("elimination falls back to the coupled row") {
    // lower triangular: component 0 is uncoupled, so its request routes
    // through the second row
    FuchsianSystem sys;
    sys.size = 2;
    sys.singular_points = {r(0)};
    Matrix<Rat> A0(2, 2);
    A0(0, 0) = r(1, 2);
    A0(1, 0) = r(2, 3);
    A0(1, 1) = r(1, 5);
    sys.residues = {A0};
    CHECK(to_scalar(sys, 0) == to_scalar(sys, 1));
}

TEST_CASE("decoupled systems are not cyclic") {
    FuchsianSystem diag;
    diag.size = 2;
    diag.singular_points = {r(0)};
    Matrix<Rat> A0(2, 2);
    A0(0, 0) = r(1, 2);
    A0(1, 1) = r(1, 3);
    diag.residues = {A0};
    CHECK_THROWS_AS(to_scalar(diag, 0), NotCyclic);
}

TEST_CASE("normal ordering in the Weyl algebra") {
    WeylElement D = WeylElement::d_pow(1);
    WeylElement Z = WeylElement::z_pow(1);
    // D z = z D + 1
    WeylElement dz = D * Z;
    CHECK(dz == Z * D + WeylElement(r(1)));
    // (zD)^2 = z^2 D^2 + z D
    WeylElement zd = Z * D;
    CHECK(zd * zd == WeylElement::z_pow(2) * WeylElement::d_pow(2) + zd);
}

TEST_CASE("the defining-equation reduction lands on the hypergeometric operator") {
    ParamSampler ps(17);
    for (int s = 0; s < 20; ++s) {
        auto [a, b, c] = ps.next_abc();
        // projective exponents of the Gauss instance: the parameter map
        // a = alpha_1 + 1, b = -alpha_3, c = alpha_1 + alpha_2 + 2 inverts to
        std::array<Rat, 4> al{b - c, a - r(1), c - a - r(1), -b};
        auto [ode, gp] = weyl_reduce(al);
        CHECK(gp.a == a);
        CHECK(gp.b == b);
        CHECK(gp.c == c);
        CHECK(ode == gauss_operator(a, b, c));
    }
    std::array<Rat, 4> bad{r(1, 2), r(1, 2), r(1, 2), r(1, 2)};
    CHECK_THROWS_AS(weyl_reduce(bad), ExponentSumViolation);
}

TEST_CASE("assembled systems match their catalog counterparts") {
    MasterFunction m = MasterFunction::gauss(kA, kB, kC);
    for (PairTag tag : all_pair_tags()) {
        FuchsianSystem sys =
            assemble_system(gauss_manin(basis_for(tag), m), {"01", pair_tag_name(tag)});
        FuchsianSystem ref = reference_system(tag, kA, kB, kC);
        REQUIRE(sys.singular_points == ref.singular_points);
        for (std::size_t k = 0; k < sys.residues.size(); ++k)
            CHECK(sys.residues[k] == ref.residues[k]);
    }
}
