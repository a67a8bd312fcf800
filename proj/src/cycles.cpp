#include "hypergm/cycles.hpp"

#include <cmath>

namespace hypergm {

namespace {

constexpr double kPi = 3.14159265358979323846;

Cplx phase(double exponent) {
    // e^{-i pi exponent}: contribution of a negative base
    return std::polar(1.0, -kPi * exponent);
}

void need(bool ok, const std::string& what) {
    if (!ok) throw DivergentEndpoint("non-integrable endpoint: " + what);
}

// int_0^1 u^{p}(1-u)^{q} * extra(u, 1-u) du
QuadResult power_integral(double p, double q, const QuadSpec& spec,
                          const std::function<double(double, double)>& extra) {
    return tanh_sinh_01(
        [&](double u, double mu) {
            double v = std::pow(u, p) * std::pow(mu, q) * extra(u, mu);
            return Cplx(v, 0.0);
        },
        spec);
}

struct Segment {
    QuadResult integral;
    Cplx phase;
};

// adjacent segments of the integrand t^{a-1}(1-t)^{c-a-1}(1-zt)^{-b} dt
Segment seg_0_1(double a, double b, double c, double z, const QuadSpec& spec) {
    need(a > 0.0, "t = 0 needs a > 0");
    need(c - a > 0.0, "t = 1 needs c - a > 0");
    return {power_integral(a - 1.0, c - a - 1.0, spec,
                           [&](double u, double) { return std::pow(1.0 - z * u, -b); }),
            Cplx(1.0, 0.0)};
}

Segment seg_1_1z(double a, double b, double c, double z, const QuadSpec& spec) {
    need(c - a > 0.0, "t = 1 needs c - a > 0");
    need(b < 1.0, "t = 1/z needs b < 1");
    // t = 1 + ((1-z)/z) u
    double r = (1.0 - z) / z;
    double scale = std::pow(r, c - a) * std::pow(1.0 - z, -b);
    QuadResult qr = power_integral(c - a - 1.0, -b, spec, [&](double u, double) {
        return std::pow(1.0 + r * u, a - 1.0);
    });
    qr.value *= scale;
    return {qr, phase(c - a - 1.0)};
}

Segment seg_1z_inf(double a, double b, double c, double z, const QuadSpec& spec) {
    need(b < 1.0, "t = 1/z needs b < 1");
    need(b - c + 1.0 > 0.0, "t = inf needs b - c + 1 > 0");
    // t = 1/(z u)
    double scale = std::pow(z, 1.0 - c);
    QuadResult qr = power_integral(b - c, -b, spec, [&](double u, double) {
        return std::pow(1.0 - z * u, c - a - 1.0);
    });
    qr.value *= scale;
    return {qr, phase(c - a - 1.0) * phase(-b)};
}

Segment seg_inf_0(double a, double b, double c, double z, const QuadSpec& spec) {
    need(b - c + 1.0 > 0.0, "t = inf needs b - c + 1 > 0");
    need(a > 0.0, "t = 0 needs a > 0");
    // t = -(1-u)/u
    QuadResult qr = power_integral(b - c, a - 1.0, spec, [&](double u, double) {
        return std::pow(z + (1.0 - z) * u, -b);
    });
    return {qr, phase(a - 1.0)};
}

}  // namespace

CycleId CycleId::parse(const std::string& s) {
    auto tag = [](const std::string& t) {
        if (t == "0") return BranchTag::Zero;
        if (t == "1") return BranchTag::One;
        if (t == "1z") return BranchTag::InvZ;
        if (t == "inf") return BranchTag::Inf;
        throw InvalidArgument("unknown branch point: " + t);
    };
    if (s == "01") return {BranchTag::Zero, BranchTag::One};
    if (s == "inf0") return {BranchTag::Inf, BranchTag::Zero};
    auto dash = s.find('-');
    if (dash != std::string::npos)
        return {tag(s.substr(0, dash)), tag(s.substr(dash + 1))};
    if (s == "1inf") return {BranchTag::One, BranchTag::Inf};
    throw InvalidArgument("unknown cycle: " + s);
}

std::string CycleId::name() const {
    auto nm = [](BranchTag t) -> std::string {
        switch (t) {
            case BranchTag::Zero: return "0";
            case BranchTag::One: return "1";
            case BranchTag::InvZ: return "1z";
            case BranchTag::Inf: return "inf";
        }
        return "?";
    };
    if (p == BranchTag::Zero && q == BranchTag::One) return "01";
    if (p == BranchTag::Inf && q == BranchTag::Zero) return "inf0";
    return nm(p) + "-" + nm(q);
}

std::vector<CycleId> all_cycles() {
    return {{BranchTag::Inf, BranchTag::Zero},  {BranchTag::Zero, BranchTag::One},
            {BranchTag::One, BranchTag::InvZ},  {BranchTag::One, BranchTag::Inf},
            {BranchTag::InvZ, BranchTag::Inf},  {BranchTag::Zero, BranchTag::InvZ}};
}

QuadResult euler_cycle_integral(double a, double b, double c, double z,
                                const CycleId& cycle, const QuadSpec& spec) {
    CycleId c01{BranchTag::Zero, BranchTag::One};
    if (cycle == c01 && z == 0.0) {
        Segment s = seg_0_1(a, b, c, 0.0, spec);
        return s.integral;
    }
    if (z <= 0.0 || z >= 1.0)
        throw InvalidArgument("cycle integrals need z in (0,1)");

    auto total = [](std::initializer_list<Segment> segs) {
        QuadResult out;
        for (const Segment& s : segs) {
            out.value += s.phase * s.integral.value;
            out.err_estimate += s.integral.err_estimate;
            out.levels_used = std::max(out.levels_used, s.integral.levels_used);
        }
        return out;
    };

    if (cycle == c01)
        return total({seg_0_1(a, b, c, z, spec)});
    if (cycle == CycleId{BranchTag::One, BranchTag::InvZ})
        return total({seg_1_1z(a, b, c, z, spec)});
    if (cycle == CycleId{BranchTag::InvZ, BranchTag::Inf})
        return total({seg_1z_inf(a, b, c, z, spec)});
    if (cycle == CycleId{BranchTag::Inf, BranchTag::Zero})
        return total({seg_inf_0(a, b, c, z, spec)});
    if (cycle == CycleId{BranchTag::One, BranchTag::Inf})
        return total({seg_1_1z(a, b, c, z, spec), seg_1z_inf(a, b, c, z, spec)});
    if (cycle == CycleId{BranchTag::Zero, BranchTag::InvZ})
        return total({seg_0_1(a, b, c, z, spec), seg_1_1z(a, b, c, z, spec)});
    throw InvalidArgument("unsupported cycle");
}

Cplx basis_seed_integral(PairTag tag, int component, double a, double b, double c,
                         double z, const QuadSpec& spec) {
    if (component == 0) {
        // Phi phi_01 = t^{a-1}(1-t)^{c-a-1}(1-zt)^{-b}
        return seg_0_1(a, b, c, z, spec).integral.value;
    }
    // exponent triple (A, B, C) of Phi phi_pq plus a rational prefactor
    double A = 0, B = 0, C = 0, pre = 1.0;
    switch (tag) {
        case PairTag::Inf0:       A = a - 1; B = c - a;     C = -b;     break;
        case PairTag::One1z:      A = a;     B = c - a - 1; C = -b - 1; pre = z - 1.0; break;
        case PairTag::One1zTilde: A = a;     B = c - a - 1; C = -b - 1; pre = z; break;
        case PairTag::OneInf:     A = a;     B = c - a - 1; C = -b;     break;
        case PairTag::InvZInf:    A = a;     B = c - a;     C = -b - 1; pre = z; break;
        case PairTag::Zero1z:     A = a - 1; B = c - a;     C = -b - 1; break;
    }
    need(A > -1.0, "t = 0 seed exponent");
    need(B > -1.0, "t = 1 seed exponent");
    QuadResult qr = power_integral(A, B, spec, [&](double u, double) {
        return std::pow(1.0 - z * u, C);
    });
    return pre * qr.value;
}

RelationReport relation_check(int k, double a, double b, double c, double z,
                              const QuadSpec& spec) {
    RelationReport rep;
    Cplx A(a, 0.0), B(b, 0.0), C(c, 0.0);
    KummerOptions ko;
    auto ph = [](double e) { return std::polar(1.0, kPi * e); };
    switch (k) {
        case 1: {
            rep.cycle = "01";
            rep.lhs = euler_cycle_integral(a, b, c, z, CycleId::parse("01"), spec).value;
            rep.rhs = beta_fn(A, C - A) * kummer_local(1, A, B, C, z, ko);
            break;
        }
        case 2: {
            rep.cycle = "1z-inf";
            rep.lhs = euler_cycle_integral(a, b, c, z, CycleId::parse("1z-inf"), spec).value;
            rep.rhs = ph(a + b - c + 1.0) * beta_fn(B - C + 1.0, 1.0 - B) *
                      kummer_local(2, A, B, C, z, ko);
            break;
        }
        case 3: {
            rep.cycle = "inf0";
            rep.lhs = euler_cycle_integral(a, b, c, z, CycleId::parse("inf0"), spec).value;
            rep.rhs = ph(1.0 - a) * beta_fn(A, B - C + 1.0) *
                      kummer_local(3, A, B, C, z, ko);
            break;
        }
        case 4: {
            rep.cycle = "1-1z";
            rep.lhs = euler_cycle_integral(a, b, c, z, CycleId::parse("1-1z"), spec).value;
            Cplx factor = ph(a - c + 1.0) * beta_fn(C - A, 1.0 - B);
            Cplx corrected = factor * kummer_local(4, A, B, C, z, ko);
            KummerOptions printed = ko;
            printed.f4 = F4Variant::Printed;
            Cplx asprinted = factor * kummer_local(4, A, B, C, z, printed);
            rep.rhs = corrected;
            rep.note = (std::abs(rep.lhs - corrected) <= std::abs(rep.lhs - asprinted))
                           ? "matches f4 with parameters (c-a, c-b); the (c-a, c-a) "
                             "variant misses by " +
                                 std::to_string(std::abs(rep.lhs - asprinted))
                           : "matches the printed (c-a, c-a) variant";
            break;
        }
        case 5: {
            // the unique matching cycle is (0, 1/z); f5 continues from above
            rep.cycle = "0-1z";
            rep.lhs = euler_cycle_integral(a, b, c, z, CycleId::parse("0-1z"), spec).value;
            ko.cut = CutSide::Above;
            rep.rhs = beta_fn(A, 1.0 - B) * kummer_local(5, A, B, C, z, ko);
            rep.note = "cycle (0,1/z); f5 on the +i0 side of the 1/z cut";
            break;
        }
        case 6: {
            rep.cycle = "1inf";
            rep.lhs = euler_cycle_integral(a, b, c, z, CycleId::parse("1inf"), spec).value;
            ko.cut = CutSide::Below;
            rep.rhs = ph(a + b - c + 1.0) * beta_fn(B - C + 1.0, C - A) *
                      kummer_local(6, A, B, C, z, ko);
            rep.note = "phase +(a+b-c+1) with f6 on the -i0 side (the conjugate "
                       "convention of the summary formula)";
            break;
        }
        default:
            throw InvalidArgument("relation index must be 1..6");
    }
    rep.abs_err = std::abs(rep.lhs - rep.rhs);
    return rep;
}

Cplx config_integral(const std::array<std::array<double, 4>, 2>& zm,
                     const std::array<double, 4>& al, const QuadSpec& spec) {
    // roots of l_1, l_2 bound the cycle; l_j(t) = z0j + t z1j
    auto root = [&](int j) {
        if (zm[1][j] == 0.0) throw InvalidArgument("form l_" + std::to_string(j) +
                                                   " has no finite root");
        return -zm[0][j] / zm[1][j];
    };
    double r1 = root(1), r2 = root(2);
    double span = r2 - r1;

    // endpoint factors peel off as u^{alpha_1} (1-u)^{alpha_2}
    double c1 = zm[1][1] * span;        // l_1(t(u)) = c1 u
    double c2 = -zm[1][2] * span;       // l_2(t(u)) = c2 (1-u)
    need(al[1] > -1.0, "cycle endpoint exponent alpha_1");
    need(al[2] > -1.0, "cycle endpoint exponent alpha_2");

    Cplx outer = std::pow(std::abs(c1), al[1]) * std::pow(std::abs(c2), al[2]) * span;
    if (c1 < 0.0) outer *= phase(al[1]);
    if (c2 < 0.0) outer *= phase(al[2]);

    // remaining factors must keep a fixed sign on the open segment
    double lo = std::min(r1, r2), hi = std::max(r1, r2);
    for (int j : {0, 3}) {
        if (zm[1][j] != 0.0) {
            double rj = -zm[0][j] / zm[1][j];
            if (rj > lo && rj < hi)
                throw InvalidArgument("root of l_" + std::to_string(j) +
                                      " lies inside the integration segment");
        }
        double mid = zm[0][j] + (r1 + span / 2.0) * zm[1][j];
        if (mid < 0.0) outer *= phase(al[j]);
    }
    QuadResult qr = power_integral(al[1], al[2], spec, [&](double u, double) {
        double t = r1 + span * u;
        double f = 1.0;
        for (int j : {0, 3}) f *= std::pow(std::abs(zm[0][j] + t * zm[1][j]), al[j]);
        return f;
    });
    return outer * qr.value;
}

std::array<CovarianceReport, 2> covariance_check(
    const std::array<std::array<double, 4>, 2>& zm,
    const std::array<std::array<double, 2>, 2>& g, const std::array<double, 4>& h,
    const std::array<double, 4>& al, const QuadSpec& spec) {
    Cplx base = config_integral(zm, al, spec);

    std::array<std::array<double, 4>, 2> gz{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 4; ++j)
            gz[i][j] = g[i][0] * zm[0][j] + g[i][1] * zm[1][j];
    double detg = g[0][0] * g[1][1] - g[0][1] * g[1][0];

    CovarianceReport linear;
    linear.lhs = config_integral(gz, al, spec);
    linear.rhs = base / detg;
    linear.abs_err = std::abs(linear.lhs - linear.rhs);

    std::array<std::array<double, 4>, 2> zh{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 4; ++j) zh[i][j] = zm[i][j] * h[j];
    Cplx scale(1.0, 0.0);
    for (int j = 0; j < 4; ++j)
        scale *= std::pow(Cplx(h[j], 0.0), Cplx(al[j], 0.0));

    CovarianceReport scaling;
    scaling.lhs = config_integral(zh, al, spec);
    scaling.rhs = base * scale;
    scaling.abs_err = std::abs(scaling.lhs - scaling.rhs);
    return {linear, scaling};
}

}  // namespace hypergm
