#include "hypergm/fuchsian.hpp"

#include <algorithm>

namespace hypergm {

PairTag parse_pair_tag(const std::string& s) {
    if (s == "inf0") return PairTag::Inf0;
    if (s == "1-1z") return PairTag::One1z;
    if (s == "tilde-1-1z") return PairTag::One1zTilde;
    if (s == "1inf") return PairTag::OneInf;
    if (s == "1z-inf") return PairTag::InvZInf;
    if (s == "0-1z") return PairTag::Zero1z;
    throw UnknownPair("unknown basis pair tag: " + s);
}

std::string pair_tag_name(PairTag t) {
    switch (t) {
        case PairTag::Inf0: return "inf0";
        case PairTag::One1z: return "1-1z";
        case PairTag::One1zTilde: return "tilde-1-1z";
        case PairTag::OneInf: return "1inf";
        case PairTag::InvZInf: return "1z-inf";
        case PairTag::Zero1z: return "0-1z";
    }
    throw UnknownPair("bad tag");
}

std::vector<PairTag> all_pair_tags() {
    return {PairTag::Inf0, PairTag::One1z, PairTag::One1zTilde,
            PairTag::OneInf, PairTag::InvZInf, PairTag::Zero1z};
}

std::vector<BasisForm> basis_for(PairTag t) {
    switch (t) {
        case PairTag::Inf0: return {gauss_form_01(), gauss_form_inf0()};
        case PairTag::One1z: return {gauss_form_01(), gauss_form_1_1z()};
        case PairTag::One1zTilde: return {gauss_form_01(), gauss_form_1_1z_tilde()};
        case PairTag::OneInf: return {gauss_form_01(), gauss_form_1inf()};
        case PairTag::InvZInf: return {gauss_form_01(), gauss_form_1z_inf()};
        case PairTag::Zero1z: return {gauss_form_01(), gauss_form_0_1z()};
    }
    throw UnknownPair("bad tag");
}

Matrix<RatFuncZ> FuchsianSystem::matrix_of_z() const {
    Matrix<RatFuncZ> a(size, size);
    RatFuncZ z = RatFuncZ::var();
    for (std::size_t s = 0; s < singular_points.size(); ++s) {
        RatFuncZ denom = z - RatFuncZ(singular_points[s]);
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j)
                a(i, j) += RatFuncZ(residues[s](i, j)) / denom;
    }
    return a;
}

namespace {

Matrix<Rat> m2(const Rat& a11, const Rat& a12, const Rat& a21, const Rat& a22) {
    Matrix<Rat> m(2, 2);
    m(0, 0) = a11; m(0, 1) = a12;
    m(1, 0) = a21; m(1, 1) = a22;
    return m;
}

}  // namespace

FuchsianSystem reference_system(PairTag tag, const Rat& a, const Rat& b, const Rat& c) {
    FuchsianSystem sys;
    sys.size = 2;
    sys.singular_points = {Rat(0), Rat(1)};
    sys.basis_labels = {"01", pair_tag_name(tag)};
    const Rat z0(0), one(1);
    switch (tag) {
        case PairTag::Inf0:
            sys.residues = {m2(z0, z0, c - a, -c),
                            m2(c - a - b, b - c, z0, z0)};
            break;
        case PairTag::One1z:
            sys.residues = {m2(z0, z0, -a, -c),
                            m2(z0, b, z0, c - a - b)};
            break;
        case PairTag::One1zTilde:
            sys.residues = {m2(z0, b, z0, one - c),
                            m2(z0, z0, -a, c - a - b - one)};
            break;
        case PairTag::OneInf:
            sys.residues = {m2(z0, z0, a, -c),
                            m2(-a, c - b, -a, c - b)};
            break;
        case PairTag::InvZInf:
            sys.residues = {m2(z0, z0, z0, -c),
                            m2(-(a * b) / c, -(b * (b - c)) / c,
                               a * (a - c) / c, (b - c) * (a - c) / c)};
            break;
        case PairTag::Zero1z:
            // the -c entry keeps det A = ab/(z(z-1)); a c-1 here breaks it
            sys.residues = {m2(z0, z0, c - a, -c),
                            m2(-b, b, a - c, c - a)};
            break;
    }
    return sys;
}

FuchsianSystem assemble_system(const ConnectionMatrix& conn,
                               const std::vector<std::string>& labels) {
    if (!conn.residues)
        throw InvalidArgument(
            "connection matrix is not a simple-pole residue sum in z");
    FuchsianSystem sys;
    sys.size = conn.entries.rows();
    for (const auto& [s, mat] : *conn.residues) {
        sys.singular_points.push_back(s);
        sys.residues.push_back(mat);
    }
    sys.basis_labels = labels;
    return sys;
}

ScalarODE2 to_scalar(const FuchsianSystem& sys, int component) {
    if (sys.size != 2) throw InvalidArgument("scalar elimination expects size 2");
    if (component < 0 || component > 1) throw InvalidArgument("component must be 0 or 1");
    Matrix<RatFuncZ> A = sys.matrix_of_z();
    int i = component, o = 1 - component;
    if (A(i, o).is_zero()) {
        // coupling row is degenerate; fall back to the other component's row
        std::swap(i, o);
        if (A(i, o).is_zero())
            throw NotCyclic("both off-diagonal entries vanish identically");
    }
    RatFuncZ ratio = A(i, o).derivative() / A(i, o);
    ScalarODE2 ode;
    ode.p = -(A(i, i) + A(o, o) + ratio);
    ode.q = A(i, i) * A(o, o) - A(i, o) * A(o, i) - A(i, i).derivative() +
            A(i, i) * ratio;
    return ode;
}

RatFuncZ det_connection(const FuchsianSystem& sys) {
    return sys.matrix_of_z().det();
}

ScalarODE2 gauss_operator(const Rat& a, const Rat& b, const Rat& c) {
    RatFuncZ z = RatFuncZ::var();
    RatFuncZ zm1 = z - RatFuncZ(Rat(1));
    ScalarODE2 ode;
    ode.p = RatFuncZ(c) / z + RatFuncZ(a + b + Rat(1) - c) / zm1;
    ode.q = RatFuncZ(a * b) / (z * zm1);
    return ode;
}

}  // namespace hypergm
