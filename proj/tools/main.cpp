// hypergm: derive connection systems, evaluate hypergeometric values, and
// run the verification suites.  JSON reports by default, --format text for
// human output.  Exit codes: 0 ok, 1 verification failure, 2 domain error,
// 3 usage error.
#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hypergm/verify.hpp"

using namespace hypergm;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Tolerances {
    QuadSpec quad;
    SeriesSpec series;
    OdeSpec ode;
};

void load_config(const std::string& path, Tolerances& tol) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open config file " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t"));
            auto e = s.find_last_not_of(" \t\r");
            s.erase(e == std::string::npos ? 0 : e + 1);
            return s;
        };
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        if (key == "quad.levels") tol.quad.levels = std::stoi(val);
        else if (key == "quad.abs_tol") tol.quad.abs_tol = std::stod(val);
        else if (key == "quad.rel_tol") tol.quad.rel_tol = std::stod(val);
        else if (key == "series.rel_tol") tol.series.rel_tol = std::stod(val);
        else if (key == "series.margin") tol.series.margin = std::stod(val);
        else if (key == "ode.abs_tol") tol.ode.abs_tol = std::stod(val);
        else if (key == "ode.rel_tol") tol.ode.rel_tol = std::stod(val);
        else throw InvalidArgument("unknown config key: " + key);
    }
}

Rat parse_rat_flag(const std::string& flag, const std::string& text) {
    try {
        return Rat::parse(text);
    } catch (const Error&) {
        throw UnknownPair("flag " + flag + " needs an exact rational (p/q or integer), got '" +
                          text + "'");  // usage-class error
    }
}

double parse_real_flag(const std::string& flag, const std::string& text) {
    try {
        return Rat::parse(text).to_double();
    } catch (const Error&) {
        try {
            std::size_t used = 0;
            double v = std::stod(text, &used);
            if (used == text.size()) return v;
        } catch (...) {
        }
        throw UnknownPair("flag " + flag + " needs a number, got '" + text + "'");
    }
}

std::string cplx_str(Cplx v) {
    std::ostringstream os;
    os.precision(16);
    os << v.real() << (v.imag() < 0 ? " - " : " + ") << std::abs(v.imag()) << "i";
    return os.str();
}

std::string matrix_str(const Matrix<RatFuncZ>& m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).str();
        os << "]";
    }
    os << "]";
    return os.str();
}

std::string rat_matrix_str(const Matrix<Rat>& m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).str();
        os << "]";
    }
    os << "]";
    return os.str();
}

struct Report {
    std::string command;
    ordered_json inputs = ordered_json::object();
    std::vector<CheckResult> results;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    bool all_pass() const {
        for (const auto& c : results)
            if (!c.pass) return false;
        return true;
    }

    int emit(const std::string& format) const {
        long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        if (format == "text") {
            std::cout << "command: " << command << "\n";
            for (auto it = inputs.begin(); it != inputs.end(); ++it)
                std::cout << "  " << it.key() << " = " << it.value().dump() << "\n";
            for (const auto& c : results) {
                std::cout << (c.pass ? "pass  " : "FAIL  ") << c.name;
                if (!c.expected.empty()) std::cout << "\n      expected: " << c.expected;
                if (!c.actual.empty()) std::cout << "\n      actual:   " << c.actual;
                if (!c.exact) std::cout << "\n      abs_err:  " << c.abs_err;
                if (!c.note.empty()) std::cout << "\n      note:     " << c.note;
                std::cout << "\n";
            }
            std::cout << "elapsed_ms: " << ms << "\n";
        } else {
            ordered_json j;
            j["command"] = command;
            j["inputs"] = inputs;
            j["results"] = ordered_json::array();
            for (const auto& c : results) {
                ordered_json r;
                r["name"] = c.name;
                r["status"] = c.pass ? "pass" : "fail";
                if (!c.expected.empty()) r["expected"] = c.expected;
                if (!c.actual.empty()) r["actual"] = c.actual;
                if (c.exact)
                    r["exact"] = true;
                else
                    r["abs_err"] = c.abs_err;
                if (!c.note.empty()) r["note"] = c.note;
                j["results"].push_back(r);
            }
            j["elapsed_ms"] = ms;
            std::cout << j.dump(2) << "\n";
        }
        return all_pass() ? 0 : 1;
    }
};

int cmd_derive(const std::string& pair, const Rat& a, const Rat& b, const Rat& c,
               const std::string& shift, const std::string& format) {
    Report rep;
    rep.command = "derive";
    rep.inputs["pair"] = pair;
    rep.inputs["a"] = a.str();
    rep.inputs["b"] = b.str();
    rep.inputs["c"] = c.str();
    rep.inputs["shift"] = shift;

    PairTag tag = parse_pair_tag(pair);
    MasterFunction m = MasterFunction::gauss(a, b, c);
    std::vector<BasisForm> basis = basis_for(tag);
    bool shifted = false;
    if (shift == "auto") {
        try {
            ShiftRecord rec = shift_exponents(m, basis);
            if (rec.applied) {
                m = rec.master;
                basis = rec.basis;
                shifted = true;
            }
        } catch (const UnabsorbableFactor&) {
            // the shared factor is 1/t; stay with the direct route
        }
    }
    rep.inputs["shift_applied"] = shifted;

    ConnectionMatrix conn = gauss_manin(basis, m);
    FuchsianSystem sys = assemble_system(conn, {"01", pair});
    FuchsianSystem ref = reference_system(tag, a, b, c);

    for (std::size_t k = 0; k < sys.singular_points.size(); ++k) {
        CheckResult r;
        r.name = "A at z=" + sys.singular_points[k].str();
        r.exact = true;
        r.actual = rat_matrix_str(sys.residues[k]);
        r.expected = rat_matrix_str(ref.residues[k]);
        r.pass = r.actual == r.expected;
        rep.results.push_back(r);
    }
    {
        CheckResult r;
        r.name = "A(z)";
        r.exact = true;
        r.actual = matrix_str(conn.entries);
        r.expected = matrix_str(ref.matrix_of_z());
        r.pass = r.actual == r.expected;
        rep.results.push_back(r);
    }
    {
        RatFuncZ z = RatFuncZ::var();
        CheckResult r;
        r.name = "det A(z)";
        r.exact = true;
        r.actual = det_connection(sys).str();
        r.expected = (RatFuncZ(a * b) / (z * (z - RatFuncZ(Rat(1))))).str();
        r.pass = r.actual == r.expected;
        rep.results.push_back(r);
    }
    return rep.emit(format);
}

int cmd_eval(const std::string& method, const std::string& sa, const std::string& sb,
             const std::string& sc, const std::string& sz, const std::string& cycle,
             int kummer_index, const std::string& cut, const std::string& pair,
             const std::string& sfrom, const Tolerances& tol, const std::string& format) {
    double a = parse_real_flag("--a", sa);
    double b = parse_real_flag("--b", sb);
    double c = parse_real_flag("--c", sc);
    double z = parse_real_flag("--z", sz);
    double from = parse_real_flag("--from", sfrom);

    Report rep;
    rep.command = "eval";
    rep.inputs["method"] = method;
    rep.inputs["a"] = sa;
    rep.inputs["b"] = sb;
    rep.inputs["c"] = sc;
    rep.inputs["z"] = sz;

    CheckResult r;
    r.pass = true;
    if (method == "series") {
        rep.inputs["rel_tol"] = tol.series.rel_tol;
        SeriesResult s = hyp2f1_series(Cplx(a, 0), Cplx(b, 0), Cplx(c, 0), Cplx(z, 0),
                                       tol.series);
        r.name = "F(a,b,c;z) by series";
        r.actual = cplx_str(s.value);
        r.abs_err = s.err_estimate;
        r.note = std::to_string(s.terms) + " terms";
    } else if (method == "euler") {
        rep.inputs["cycle"] = cycle;
        rep.inputs["quad_rel_tol"] = tol.quad.rel_tol;
        QuadResult q = euler_cycle_integral(a, b, c, z, CycleId::parse(cycle), tol.quad);
        r.name = "cycle integral over " + cycle;
        r.actual = cplx_str(q.value);
        r.abs_err = q.err_estimate;
        r.note = "tanh-sinh level " + std::to_string(q.levels_used);
    } else if (method == "kummer") {
        rep.inputs["index"] = kummer_index;
        KummerOptions ko;
        ko.series = tol.series;
        ko.cut = (cut == "below") ? CutSide::Below : CutSide::Above;
        Cplx v = kummer_local(kummer_index, Cplx(a, 0), Cplx(b, 0), Cplx(c, 0), z, ko);
        r.name = "local solution f" + std::to_string(kummer_index);
        r.actual = cplx_str(v);
        r.abs_err = tol.series.rel_tol * std::abs(v);
        if (kummer_index >= 5) r.note = "1/z continuation from " + cut + " the cut";
    } else if (method == "ode") {
        // the system is assembled exactly, so the parameters must be exact
        Rat ra = parse_rat_flag("--a", sa), rb = parse_rat_flag("--b", sb),
            rc = parse_rat_flag("--c", sc);
        rep.inputs["pair"] = pair;
        rep.inputs["from"] = sfrom;
        rep.inputs["ode_rel_tol"] = tol.ode.rel_tol;
        PairTag tag = parse_pair_tag(pair);
        MasterFunction m = MasterFunction::gauss(ra, rb, rc);
        FuchsianSystem sys = assemble_system(gauss_manin(basis_for(tag), m), {"01", pair});
        std::vector<Cplx> init{basis_seed_integral(tag, 0, a, b, c, from, tol.quad),
                               basis_seed_integral(tag, 1, a, b, c, from, tol.quad)};
        PathPlan path{{Cplx(from, 0), Cplx(z, 0)}, 1e-2};
        std::vector<Cplx> y = ode_solve_path(sys, path, init, tol.ode);
        r.name = "transported f01 component (pair " + pair + ")";
        r.actual = cplx_str(y[0]);
        r.abs_err = tol.ode.rel_tol * std::abs(y[0]);
        r.note = "seeded by quadrature at z = " + sfrom;
    } else {
        throw UnknownPair("unknown eval method: " + method);
    }
    rep.results.push_back(r);
    return rep.emit(format);
}

int cmd_verify(const std::string& suite, int samples, unsigned long long seed,
               const Tolerances& tol, const std::string& format) {
    Report rep;
    rep.command = "verify";
    rep.inputs["suite"] = suite;
    rep.inputs["samples"] = samples;
    rep.inputs["seed"] = seed;

    VerifyOptions opt;
    opt.samples = samples;
    opt.seed = seed;
    opt.quad = tol.quad;
    opt.series = tol.series;
    opt.ode = tol.ode;

    std::vector<std::string> names;
    if (suite == "all")
        names = suite_names();
    else
        names = {suite};
    for (const std::string& n : names) {
        SuiteResult sr = run_suite(n, opt);
        for (auto& c : sr.checks) {
            c.name = n + ": " + c.name;
            rep.results.push_back(std::move(c));
        }
    }
    return rep.emit(format);
}

int cmd_normalize(const std::string& matrix_json, const std::string& format) {
    Report rep;
    rep.command = "normalize";
    rep.inputs["matrix"] = matrix_json;

    ordered_json j = ordered_json::parse(matrix_json, nullptr, false);
    if (j.is_discarded() || !j.is_array() || j.size() != 2)
        throw UnknownPair("--matrix needs a JSON 2-row array of rational strings");
    std::size_t cols = j[0].size();
    if (cols < 4 || j[1].size() != cols)
        throw UnknownPair("--matrix needs two rows of equal length >= 4");
    Matrix<Rat> m(2, static_cast<int>(cols));
    for (int i = 0; i < 2; ++i)
        for (std::size_t k = 0; k < cols; ++k) {
            const auto& cell = j[i][k];
            m(i, static_cast<int>(k)) =
                cell.is_string() ? Rat::parse(cell.get<std::string>())
                                 : Rat(cell.get<long>());
        }
    ConfigZ cfg = normalize_z_matrix(m);
    for (std::size_t k = 0; k < cfg.params.size(); ++k) {
        CheckResult r;
        r.name = "z" + std::to_string(k + 3);
        r.exact = true;
        r.actual = cfg.params[k].str();
        r.expected = RatFuncZ(column_cross_ratio(m, static_cast<int>(k + 3))).str();
        r.note = "cross-ratio of columns (0,1,2," + std::to_string(k + 3) + ")";
        r.pass = r.actual == r.expected;
        rep.results.push_back(r);
    }
    return rep.emit(format);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fuchsian connection systems for hypergeometric integrals"};
    app.require_subcommand(1);
    app.fallthrough();  // --format/--config may follow the subcommand

    std::string format = "json", config_path;
    app.add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    app.add_option("--config", config_path, "key=value tolerance defaults");

    auto* derive = app.add_subcommand("derive", "derive a connection system");
    std::string pair, sa, sb, sc, shift = "auto";
    derive->add_option("--pair", pair)->required();
    derive->add_option("--a", sa)->required();
    derive->add_option("--b", sb)->required();
    derive->add_option("--c", sc)->required();
    derive->add_option("--shift", shift)->check(CLI::IsMember({"auto", "off"}));

    auto* eval = app.add_subcommand("eval", "evaluate a hypergeometric value");
    std::string method, ea = "1/3", eb = "1/5", ec = "5/7", ez = "1/2";
    std::string cycle = "01", epair = "tilde-1-1z", efrom = "1/10", cut = "above";
    int kummer_index = 1;
    eval->add_option("--method", method)->required();
    eval->add_option("--a", ea);
    eval->add_option("--b", eb);
    eval->add_option("--c", ec);
    eval->add_option("--z", ez);
    eval->add_option("--cycle", cycle);
    eval->add_option("--kummer-index", kummer_index)->check(CLI::Range(1, 6));
    eval->add_option("--cut", cut)->check(CLI::IsMember({"above", "below"}));
    eval->add_option("--pair", epair);
    eval->add_option("--from", efrom);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    int samples = 20;
    unsigned long long seed = 12345;
    verify->add_option("--suite", suite);
    verify->add_option("--samples", samples)->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed);

    auto* normalize = app.add_subcommand("normalize", "canonicalize a configuration matrix");
    std::string matrix_json;
    normalize->add_option("--matrix", matrix_json)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }

    try {
        Tolerances tol;
        if (!config_path.empty()) load_config(config_path, tol);
        if (derive->parsed())
            return cmd_derive(pair, parse_rat_flag("--a", sa), parse_rat_flag("--b", sb),
                              parse_rat_flag("--c", sc), shift, format);
        if (eval->parsed())
            return cmd_eval(method, ea, eb, ec, ez, cycle, kummer_index, cut, epair,
                            efrom, tol, format);
        if (verify->parsed()) return cmd_verify(suite, samples, seed, tol, format);
        if (normalize->parsed()) return cmd_normalize(matrix_json, format);
    } catch (const UnknownPair& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 3;
    } catch (const InvalidArgument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 3;
}
