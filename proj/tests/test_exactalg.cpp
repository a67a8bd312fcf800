#include "doctest.h"

#include "hypergm/exactalg.hpp"
#include "hypergm/linalg.hpp"

using namespace hypergm;

namespace {

PolyZ poly(std::initializer_list<long> ascending) {
    std::vector<Rat> c;
    for (long x : ascending) c.push_back(Rat(x));
    return PolyZ(std::move(c));
}

// deterministic little generator for the property checks
struct Rng {
    unsigned long long s;
    unsigned long long next() {
        s += 0x9e3779b97f4a7c15ULL;
        unsigned long long x = s;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }
    Rat rat() {
        long n = static_cast<long>(next() % 19) - 9;
        long d = 1 + static_cast<long>(next() % 6);
        return Rat(n, d);
    }
};

}  // namespace

TEST_CASE("rationals parse and canonicalize") {
    CHECK(Rat::parse("3/7") == Rat(3, 7));
    CHECK(Rat::parse("-6/4") == Rat(-3, 2));
    CHECK(Rat::parse("12") == Rat(12));
    CHECK(Rat(4, -6) == Rat(-2, 3));
    CHECK_THROWS_AS(Rat::parse("1/0"), DivisionByZero);
    CHECK_THROWS_AS(Rat::parse("a/b"), InvalidArgument);
    CHECK_THROWS_AS(Rat(1, 2) / Rat(0), DivisionByZero);
    CHECK(Rat(7, 3).str() == "7/3");
    CHECK(Rat(-8, 4).str() == "-2");
}

TEST_CASE("normalization returns the reduced monic representative") {
    // (z^2 - 1)/(z - 1) = z + 1
    RatFuncZ f = rf_normalize(poly({-1, 0, 1}), poly({-1, 1}));
    CHECK(f == RatFuncZ(poly({1, 1})));
    // 0/(z^3) = 0/1
    RatFuncZ zero = rf_normalize(PolyZ(), poly({0, 0, 0, 1}));
    CHECK(zero.is_zero());
    CHECK(zero.den().is_one());
    // (2z)/(4z^2) = (1/2)/z
    RatFuncZ g = rf_normalize(poly({0, 2}), poly({0, 0, 4}));
    CHECK(g.num() == PolyZ(Rat(1, 2)));
    CHECK(g.den() == poly({0, 1}));
    CHECK_THROWS_AS(rf_normalize(poly({1}), PolyZ()), DivisionByZero);
}

TEST_CASE("normalization is idempotent") {
    Rng rng{7};
    for (int i = 0; i < 50; ++i) {
        std::vector<Rat> nc, dc;
        for (int k = 0; k <= 3; ++k) nc.push_back(rng.rat());
        for (int k = 0; k <= 2; ++k) dc.push_back(rng.rat());
        dc.push_back(Rat(1));
        RatFuncZ f{PolyZ(nc), PolyZ(dc)};
        CHECK(rf_normalize(f.num(), f.den()) == f);
    }
}

TEST_CASE("evaluation: exact points, poles, and the determinant value") {
    RatFuncZ f(poly({1, 1}), poly({-1, 1}));  // (z+1)/(z-1)
    CHECK(rf_eval(f, Rat(3)) == Rat(2));
    CHECK_THROWS_AS(rf_eval(f, Rat(1)), PoleAtPoint);

    // ab/(z(z-1)) at a=1/2, b=1/3, z=2 -> 1/12
    Rat a(1, 2), b(1, 3);
    RatFuncZ det(PolyZ(a * b), poly({0, -1, 1}));
    CHECK(rf_eval(det, Rat(2)) == Rat(1, 12));

    std::complex<double> v = rf_eval(f, std::complex<double>(0.0, 1.0));
    CHECK(std::abs(v - std::complex<double>(0.0, -1.0)) < 1e-15);
}

TEST_CASE("evaluation is a ring morphism away from poles") {
    Rng rng{11};
    for (int i = 0; i < 60; ++i) {
        RatFuncZ f(PolyZ(std::vector<Rat>{rng.rat(), rng.rat()}),
                   PolyZ(std::vector<Rat>{rng.rat(), Rat(1)}));
        RatFuncZ g(PolyZ(std::vector<Rat>{rng.rat(), rng.rat(), rng.rat()}),
                   PolyZ(std::vector<Rat>{rng.rat(), Rat(1)}));
        Rat p = rng.rat();
        Rat fd = f.den().eval(p), gd = g.den().eval(p);
        if (fd.is_zero() || gd.is_zero()) continue;
        CHECK(rf_eval(f * g, p) == rf_eval(f, p) * rf_eval(g, p));
        CHECK(rf_eval(f + g, p) == rf_eval(f, p) + rf_eval(g, p));
    }
}

TEST_CASE("partial fractions: the quoted decompositions") {
    // 1/(z(z-1)) = -1/z + 1/(z-1)
    ResidueDecomposition d = residue_decompose(RatFuncZ(poly({1}), poly({0, -1, 1})));
    REQUIRE(d.terms.size() == 2);
    CHECK(d.poly_part.is_zero());
    CHECK(d.terms[0].pole == Rat(0));
    CHECK(d.terms[0].coeff == Rat(-1));
    CHECK(d.terms[1].pole == Rat(1));
    CHECK(d.terms[1].coeff == Rat(1));

    // (2z-1)/(z(z-1)) = 1/z + 1/(z-1)
    d = residue_decompose(RatFuncZ(poly({-1, 2}), poly({0, -1, 1})));
    REQUIRE(d.terms.size() == 2);
    CHECK(d.terms[0].coeff == Rat(1));
    CHECK(d.terms[1].coeff == Rat(1));

    // z^2/(z-1) = (z + 1) + 1/(z-1)
    d = residue_decompose(RatFuncZ(poly({0, 0, 1}), poly({-1, 1})));
    CHECK(d.poly_part == poly({1, 1}));
    REQUIRE(d.terms.size() == 1);
    CHECK(d.terms[0].coeff == Rat(1));
    CHECK(d.terms[0].order == 1);
}

TEST_CASE("partial fractions reject irreducible quadratics") {
    CHECK_THROWS_AS(residue_decompose(RatFuncZ(poly({1}), poly({1, 0, 1}))),
                    NonlinearDenominator);
}

TEST_CASE("decompose-then-recombine is the identity on random inputs") {
    Rng rng{23};
    int done = 0;
    while (done < 100) {
        // denominator: product of linear factors, some repeated
        std::vector<Rat> roots;
        int nroots = 1 + static_cast<int>(rng.next() % 3);
        for (int k = 0; k < nroots; ++k) roots.push_back(rng.rat());
        PolyZ den(Rat(1));
        for (const Rat& r : roots) {
            int mult = 1 + static_cast<int>(rng.next() % 2);
            for (int i = 0; i < mult; ++i)
                den *= PolyZ(std::vector<Rat>{-r, Rat(1)});
        }
        std::vector<Rat> nc;
        for (int k = 0; k <= den.degree(); ++k) nc.push_back(rng.rat());
        PolyZ num(nc);
        if (num.is_zero()) continue;
        RatFuncZ f(num, den);
        ResidueDecomposition d = residue_decompose(f);
        CHECK(d.recombine() == f);
        ++done;
    }
}

TEST_CASE("small linear algebra over Q(z)") {
    RatFuncZ z = RatFuncZ::var();
    Matrix<RatFuncZ> m(2, 2);
    m(0, 0) = z;
    m(0, 1) = RatFuncZ(Rat(1));
    m(1, 0) = RatFuncZ(Rat(1));
    m(1, 1) = z;
    CHECK(m.det() == z * z - RatFuncZ(Rat(1)));
    auto inv = m.inverse();
    REQUIRE(inv);
    CHECK((m * *inv) == Matrix<RatFuncZ>::identity(2));
    CHECK(m.rank() == 2);

    Matrix<RatFuncZ> sing(2, 2);
    sing(0, 0) = z;
    sing(0, 1) = z;
    sing(1, 0) = z;
    sing(1, 1) = z;
    CHECK(sing.rank() == 1);
    CHECK_FALSE(sing.inverse());
}
