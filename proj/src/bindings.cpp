#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hypergm/verify.hpp"

namespace py = pybind11;
using namespace hypergm;

namespace {

std::vector<std::vector<std::string>> matrix_strings(const Matrix<Rat>& m) {
    std::vector<std::vector<std::string>> out(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out[i].push_back(m(i, j).str());
    return out;
}

py::dict system_dict(const FuchsianSystem& sys) {
    py::dict d;
    py::list points, residues;
    for (const Rat& s : sys.singular_points) points.append(s.str());
    for (const auto& r : sys.residues) residues.append(matrix_strings(r));
    d["singular_points"] = points;
    d["residues"] = residues;
    d["basis"] = sys.basis_labels;
    return d;
}

py::dict derive(const std::string& pair, const std::string& a, const std::string& b,
                const std::string& c) {
    PairTag tag = parse_pair_tag(pair);
    Rat ra = Rat::parse(a), rb = Rat::parse(b), rc = Rat::parse(c);
    MasterFunction m = MasterFunction::gauss(ra, rb, rc);
    ConnectionMatrix conn = gauss_manin(basis_for(tag), m);
    FuchsianSystem sys = assemble_system(conn, {"01", pair});
    FuchsianSystem ref = reference_system(tag, ra, rb, rc);

    py::dict d;
    d["derived"] = system_dict(sys);
    d["reference"] = system_dict(ref);
    bool equal = sys.singular_points == ref.singular_points;
    for (std::size_t k = 0; equal && k < sys.residues.size(); ++k)
        equal = sys.residues[k] == ref.residues[k];
    d["matches_reference"] = equal;
    d["det"] = det_connection(sys).str();
    ScalarODE2 ode = to_scalar(sys, 0);
    d["scalar_p"] = ode.p.str();
    d["scalar_q"] = ode.q.str();
    return d;
}

py::dict weyl(const std::vector<std::string>& alphas) {
    if (alphas.size() != 4) throw InvalidArgument("need four exponents");
    std::array<Rat, 4> al;
    for (int i = 0; i < 4; ++i) al[i] = Rat::parse(alphas[i]);
    auto [ode, gp] = weyl_reduce(al);
    py::dict d;
    d["p"] = ode.p.str();
    d["q"] = ode.q.str();
    d["a"] = gp.a.str();
    d["b"] = gp.b.str();
    d["c"] = gp.c.str();
    return d;
}

std::complex<double> eval_series(double a, double b, double c, double z) {
    return hyp2f1_series(Cplx(a, 0), Cplx(b, 0), Cplx(c, 0), Cplx(z, 0), {}).value;
}

std::complex<double> eval_cycle(double a, double b, double c, double z,
                                const std::string& cycle) {
    return euler_cycle_integral(a, b, c, z, CycleId::parse(cycle), {}).value;
}

std::complex<double> eval_kummer(int index, double a, double b, double c, double z,
                                 const std::string& cut) {
    KummerOptions ko;
    ko.cut = (cut == "below") ? CutSide::Below : CutSide::Above;
    return kummer_local(index, Cplx(a, 0), Cplx(b, 0), Cplx(c, 0), z, ko);
}

py::dict relation(int index, double a, double b, double c, double z) {
    RelationReport rep = relation_check(index, a, b, c, z, {});
    py::dict d;
    d["lhs"] = rep.lhs;
    d["rhs"] = rep.rhs;
    d["abs_err"] = rep.abs_err;
    d["cycle"] = rep.cycle;
    d["note"] = rep.note;
    return d;
}

py::dict verify(const std::string& suite, int samples, unsigned long long seed) {
    VerifyOptions opt;
    opt.samples = samples;
    opt.seed = seed;
    SuiteResult r = run_suite(suite, opt);
    py::dict d;
    d["suite"] = r.name;
    d["checks"] = static_cast<int>(r.checks.size());
    d["failures"] = r.failures();
    py::list failed;
    for (const auto& c : r.checks)
        if (!c.pass) failed.append(c.name);
    d["failed"] = failed;
    return d;
}

std::vector<std::string> normalize(const std::vector<std::vector<std::string>>& rows) {
    if (rows.size() != 2) throw InvalidArgument("need a 2-row matrix");
    Matrix<Rat> m(2, static_cast<int>(rows[0].size()));
    for (int i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m(i, static_cast<int>(j)) = Rat::parse(rows[i][j]);
    ConfigZ cfg = normalize_z_matrix(m);
    std::vector<std::string> out;
    for (const RatFuncZ& p : cfg.params) out.push_back(p.str());
    return out;
}

}  // namespace

PYBIND11_MODULE(_hypergm, m) {
    m.doc() = "Fuchsian connection systems for hypergeometric integrals";

    m.def("derive", &derive, py::arg("pair"), py::arg("a"), py::arg("b"), py::arg("c"),
          "Derive the connection system for a basis pair at exact rational (a, b, c)");
    m.def("weyl_reduce", &weyl, py::arg("alphas"),
          "Second-order operator from the four exponents, plus the parameter map");
    m.def("hyp2f1", &eval_series, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"));
    m.def("cycle_integral", &eval_cycle, py::arg("a"), py::arg("b"), py::arg("c"),
          py::arg("z"), py::arg("cycle"));
    m.def("kummer_local", &eval_kummer, py::arg("index"), py::arg("a"), py::arg("b"),
          py::arg("c"), py::arg("z"), py::arg("cut") = "above");
    m.def("relation_check", &relation, py::arg("index"), py::arg("a"), py::arg("b"),
          py::arg("c"), py::arg("z"));
    m.def("verify", &verify, py::arg("suite"), py::arg("samples") = 20,
          py::arg("seed") = 12345);
    m.def("normalize_matrix", &normalize, py::arg("rows"),
          "Canonical parameters z_j of a 2 x (n+1) rational matrix");

    py::register_exception<Error>(m, "HypergmError");
}
