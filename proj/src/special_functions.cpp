#include "hypergm/special_functions.hpp"

#include <cmath>

#include "hypergm/errors.hpp"

namespace hypergm {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_nonpositive_integer(Cplx c) {
    if (std::abs(c.imag()) > 1e-13) return false;
    double r = std::round(c.real());
    return r <= 0.5 && std::abs(c.real() - r) < 1e-13;
}

bool is_integerish(Cplx c) {
    return std::abs(c.imag()) < 1e-13 &&
           std::abs(c.real() - std::round(c.real())) < 1e-13;
}

}  // namespace

Cplx pochhammer(Cplx a, int n) {
    if (n < 0) throw InvalidArgument("pochhammer needs n >= 0");
    Cplx acc(1.0, 0.0);
    for (int k = 0; k < n; ++k) acc *= (a + static_cast<double>(k));
    return acc;
}

Cplx gamma_ln(Cplx s) {
    static const double g7[9] = {
        0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,    12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6,  1.5056327351493116e-7};
    if (is_nonpositive_integer(s)) throw PolePar("log-Gamma pole at " +
                                                 std::to_string(s.real()));
    if (s.real() < 0.5)
        return std::log(kPi / std::sin(kPi * s)) - gamma_ln(1.0 - s);
    s -= 1.0;
    Cplx acc(g7[0], 0.0);
    for (int i = 1; i < 9; ++i) acc += g7[i] / (s + static_cast<double>(i));
    Cplx t = s + 7.5;
    return 0.5 * std::log(2.0 * kPi) + (s + 0.5) * std::log(t) - t + std::log(acc);
}

Cplx gamma_fn(Cplx a) { return std::exp(gamma_ln(a)); }

Cplx beta_fn(Cplx a, Cplx b) {
    return std::exp(gamma_ln(a) + gamma_ln(b) - gamma_ln(a + b));
}

SeriesResult hyp2f1_series(Cplx a, Cplx b, Cplx c, Cplx z, const SeriesSpec& spec) {
    if (is_nonpositive_integer(c))
        throw PolePar("c is a non-positive integer");
    if (std::abs(z) >= 1.0 - spec.margin)
        throw OutsideDisk("series needs |z| < " + std::to_string(1.0 - spec.margin));
    SeriesResult out;
    Cplx sum(1.0, 0.0), term(1.0, 0.0);
    int small_streak = 0;
    int n = 0;
    while (n < spec.max_terms) {
        term *= (a + static_cast<double>(n)) * (b + static_cast<double>(n)) /
                ((c + static_cast<double>(n)) * static_cast<double>(n + 1)) * z;
        sum += term;
        ++n;
        if (std::abs(term) < spec.rel_tol * std::abs(sum)) {
            if (++small_streak >= 3) break;
        } else {
            small_streak = 0;
        }
    }
    out.value = sum;
    out.terms = n;
    out.err_estimate = std::abs(term) / std::max(1e-300, std::abs(sum));
    return out;
}

Cplx hyp2f1_cut(Cplx a, Cplx b, Cplx c, double x, CutSide side,
                const SeriesSpec& spec) {
    if (x <= 1.0) throw InvalidArgument("cut evaluation expects x > 1");
    if (is_integerish(a - b))
        throw PolePar("inversion formula needs a - b not an integer");
    // F(a,b,c;x) = G1 (-x)^{-a} F(a, a-c+1, a-b+1; 1/x)
    //            + G2 (-x)^{-b} F(b, b-c+1, b-a+1; 1/x),
    // with (-x)^{-s} = x^{-s} e^{+i pi s} on the x + i0 side.
    double sgn = (side == CutSide::Above) ? +1.0 : -1.0;
    Cplx i_pi(0.0, sgn * kPi);
    Cplx g1 = std::exp(gamma_ln(c) + gamma_ln(b - a) - gamma_ln(b) - gamma_ln(c - a) -
                       a * std::log(Cplx(x, 0.0)) + i_pi * a);
    Cplx g2 = std::exp(gamma_ln(c) + gamma_ln(a - b) - gamma_ln(a) - gamma_ln(c - b) -
                       b * std::log(Cplx(x, 0.0)) + i_pi * b);
    Cplx inv(1.0 / x, 0.0);
    Cplx f1 = hyp2f1_series(a, a - c + 1.0, a - b + 1.0, inv, spec).value;
    Cplx f2 = hyp2f1_series(b, b - c + 1.0, b - a + 1.0, inv, spec).value;
    return g1 * f1 + g2 * f2;
}

Cplx kummer_local(int index, Cplx a, Cplx b, Cplx c, double z,
                  const KummerOptions& opt) {
    if (z <= 0.0 || z >= 1.0)
        throw InvalidArgument("local solutions are evaluated for z in (0,1)");
    Cplx zc(z, 0.0);
    switch (index) {
        case 1:
            return hyp2f1_series(a, b, c, zc, opt.series).value;
        case 2:
            if (is_integerish(c)) throw PolePar("f2 needs c not an integer");
            return std::pow(zc, 1.0 - c) *
                   hyp2f1_series(a - c + 1.0, b - c + 1.0, 2.0 - c, zc, opt.series).value;
        case 3:
            if (is_integerish(a + b - c)) throw PolePar("f3 needs a+b-c not an integer");
            return hyp2f1_series(a, b, a + b - c + 1.0, 1.0 - zc, opt.series).value;
        case 4: {
            if (is_integerish(a + b - c)) throw PolePar("f4 needs a+b-c not an integer");
            Cplx second = (opt.f4 == F4Variant::Corrected) ? c - b : c - a;
            return std::pow(1.0 - zc, c - a - b) *
                   hyp2f1_series(c - a, second, c - a - b + 1.0, 1.0 - zc, opt.series).value;
        }
        case 5: {
            if (is_integerish(a - b)) throw PolePar("f5 needs a-b not an integer");
            return std::pow(zc, -a) *
                   hyp2f1_cut(a, a - c + 1.0, a - b + 1.0, 1.0 / z, opt.cut, opt.series);
        }
        case 6: {
            if (is_integerish(a - b)) throw PolePar("f6 needs a-b not an integer");
            return std::pow(zc, -b) *
                   hyp2f1_cut(b - c + 1.0, b, b - a + 1.0, 1.0 / z, opt.cut, opt.series);
        }
        default:
            throw InvalidArgument("local solution index must be 1..6");
    }
}

}  // namespace hypergm
